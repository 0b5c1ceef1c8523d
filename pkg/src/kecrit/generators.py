"""Deterministic graph families and exhaustive labelled enumeration."""

from __future__ import annotations

import random
from collections.abc import Iterator

from kecrit.errors import DomainError, SizeLimitError
from kecrit.graph import Graph

ALL_GRAPHS_MAX_N = 7
KINDS = ("path", "cycle", "complete", "complete_bipartite", "gnp", "empty")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gnp(n: int, p: float, seed: int | None = 0) -> Graph:
    """Erdős–Rényi G(n, p); pairs are visited in graph6 column order."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"edge probability {p} outside [0, 1]")
    return _gnp(n, p, random.Random(seed))


def _gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n, [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    )


def gnp_corpus(n: int, p: float, count: int, seed: int | None = 0) -> list[Graph]:
    """``count`` graphs drawn from one seeded stream."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    return [_gnp(n, p, rng) for _ in range(count)]


def edge_slots(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 order; bit ``k`` of an enumeration mask is slot ``k``."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices, by increasing edge mask."""
    if n > ALL_GRAPHS_MAX_N:
        raise SizeLimitError(f"all_graphs is capped at n={ALL_GRAPHS_MAX_N}, got {n}")
    if n < 0:
        raise DomainError("negative vertex count")
    slots = [(1 << i, 1 << j, i, j) for i, j in edge_slots(n)]
    for mask in range(1 << len(slots)):
        adj = [0] * n
        k = 0
        while mask:
            if mask & 1:
                bi, bj, i, j = slots[k]
                adj[i] |= bj
                adj[j] |= bi
            mask >>= 1
            k += 1
        yield Graph(n, tuple(adj))


def generate(kind: str, params: dict, seed: int | None = 0) -> Graph | Iterator[Graph]:
    """Dispatch by family name; ``all_graphs`` returns an iterator."""
    n = params.get("n", 0)
    if kind == "path":
        return path(n)
    if kind == "cycle":
        return cycle(n)
    if kind == "complete":
        return complete(n)
    if kind == "empty":
        return empty(n)
    if kind == "complete_bipartite":
        return complete_bipartite(params["a"], params["b"])
    if kind == "gnp":
        return gnp(n, params["p"], seed)
    if kind == "all_graphs":
        return all_graphs(n)
    raise DomainError(f"unknown graph kind {kind!r}")
