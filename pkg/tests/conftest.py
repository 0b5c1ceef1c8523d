import pytest
from hypothesis import strategies as st

from kecrit import fixtures
from kecrit.generators import edge_slots
from kecrit.graph import Graph

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    slots = edge_slots(n)
    mask = draw(st.integers(0, (1 << len(slots)) - 1))
    return Graph.from_edges(n, [e for k, e in enumerate(slots) if mask >> k & 1])


@st.composite
def graph_and_subset(draw, min_n=0, max_n=7):
    g = draw(graphs(min_n, max_n))
    x = draw(st.integers(0, (1 << g.n) - 1))
    return g, x


@pytest.fixture
def g1():
    return fixtures.fig1_g1()


@pytest.fixture
def g2():
    return fixtures.fig1_g2()


@pytest.fixture
def fig2():
    return fixtures.fig2_g()


@pytest.fixture
def fig3():
    return fixtures.fig3_g()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, note = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}  {note}")
