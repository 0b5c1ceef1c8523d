import pytest

from kecrit.errors import DomainError, SizeLimitError
from kecrit.formats import to_graph6
from kecrit.generators import (
    all_graphs,
    complete_bipartite,
    cycle,
    generate,
    gnp,
    gnp_corpus,
    path,
)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_all_graphs_count(n, count):
    graphs = list(all_graphs(n))
    assert len(graphs) == count
    assert len({to_graph6(g) for g in graphs}) == count


def test_all_graphs_limit():
    with pytest.raises(SizeLimitError):
        next(all_graphs(8))


def test_path_edges():
    assert path(4).edges == ((0, 1), (1, 2), (2, 3))


def test_cycle_and_bipartite():
    assert cycle(5).m == 5
    assert all(cycle(5).degree(v) == 2 for v in range(5))
    k = complete_bipartite(2, 3)
    assert k.m == 6 and not k.has_edge(0, 1) and k.has_edge(0, 4)
    with pytest.raises(DomainError):
        cycle(2)


def test_gnp_deterministic():
    assert gnp(10, 0.3, seed=11) == gnp(10, 0.3, seed=11)
    assert gnp_corpus(12, 0.3, 5, seed=7) == gnp_corpus(12, 0.3, 5, seed=7)
    assert gnp(10, 0.0, seed=1).m == 0
    assert gnp(6, 1.0, seed=1).m == 15
    with pytest.raises(DomainError):
        gnp(5, 1.5)


def test_generate_dispatch():
    assert generate("path", {"n": 4}) == path(4)
    assert len(list(generate("all_graphs", {"n": 3}))) == 8
    with pytest.raises(DomainError):
        generate("petersen", {})
