import pytest

from kecrit import suite
from kecrit.generators import all_graphs, complete, cycle
from kecrit.graph import Graph
from kecrit.suite import CHECKS, HOLDS, PREMISE_NOT_MET, VIOLATION, Summary, run_corpus, theorem_suite


@pytest.mark.parametrize("name", ["g1", "g2", "fig3"])
def test_fixtures_have_no_violations(name, request):
    r = theorem_suite(request.getfixturevalue(name))
    assert [c.name for c in r.checks] == list(CHECKS)
    assert r.violations == []


def test_fig2_strict_inclusion_witness(fig2):
    r = theorem_suite(fig2)
    lem1 = next(c for c in r.checks if c.name == "lem1")
    assert lem1.status == HOLDS
    assert ["a", "b", "c", "d", "e", "k"] in lem1.detail["omega_X_minus_maxcritindep"]


def test_fig3_statuses(fig3):
    r = theorem_suite(fig3)
    assert r.status("th12") == HOLDS
    assert r.status("cor7") == PREMISE_NOT_MET
    assert r.status("th1_iii") == PREMISE_NOT_MET


def test_ke_graph_meets_conditionals():
    r = theorem_suite(cycle(6))
    assert r.status("th1_iii") == HOLDS
    assert r.status("cor_diadem_corona") == HOLDS


def test_exhaustive_small():
    for n in range(5):
        for g in all_graphs(n):
            assert theorem_suite(g).violations == []


def test_sampling_path_many_maximum_sets():
    g = Graph.from_edges(8, [(0, 1), (2, 3), (4, 5), (6, 7)])
    assert len(suite.Subfamilies.of(tuple(range(1, 17)), __import__("random").Random(1)).masks) == suite.SAMPLE_SIZE + 1
    r = theorem_suite(g)
    assert r.violations == []
    assert r.status("th15") == HOLDS


def test_sampling_is_seeded():
    import random

    a = suite.Subfamilies.of(tuple(range(1, 20)), random.Random(5)).masks
    b = suite.Subfamilies.of(tuple(range(1, 20)), random.Random(5)).masks
    assert a == b


def test_violation_carries_witness(monkeypatch):
    monkeypatch.setattr(suite.poly, "ker_poly", lambda g: 0)
    r = theorem_suite(Graph(2, (0, 0)))
    (v,) = r.violations
    assert v.name == "poly_ker"
    assert v.detail["graph6"] == "A?" and "edge_list" in v.detail
    s = Summary()
    s.add(0, r)
    d = s.to_dict()
    assert not s.ok and d["ker_poly_gate"] == "experimental-failed"
    assert d["checks"]["poly_ker"][VIOLATION] == 1


def test_run_corpus_preserves_order():
    graphs = [complete(3), cycle(4), Graph(0, ())]
    serial = [r.graph6 for r in run_corpus(graphs, jobs=1)]
    pooled = [r.graph6 for r in run_corpus(graphs, jobs=2)]
    assert serial == pooled == ["Bw", "Cl", "?"]


def test_summary_counts():
    s = Summary()
    for i, g in enumerate(all_graphs(3)):
        s.add(i, theorem_suite(g))
    d = s.to_dict()
    assert d["graphs"] == 8 and d["ok"] and d["ker_poly_gate"] == "passed"
    assert all(sum(c.values()) == 8 for c in d["checks"].values())
