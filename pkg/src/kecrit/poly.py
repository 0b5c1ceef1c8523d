"""Polynomial-time critical-independence invariants via the double cover.

For ``X ⊆ V`` the set ``X ∪ (V - N(X))'`` is independent in the double cover
``B(G)`` and has ``n + d(X)`` vertices; conversely every independent set of
``B(G)`` is dominated by one of that shape.  Hence ``α(B) = n + d(G)`` and
``d(G) = n - μ(B)`` by König's theorem.  Constrained versions of the same
matching problem answer membership questions:

* forcing both copies of every vertex of an independent ``T`` into the
  independent set of ``B`` (delete ``N(T)`` and ``N(T)'``) keeps ``α(B)``
  unchanged iff ``T`` lies inside some critical independent set;
* deleting only the left copy of ``v`` lowers ``α(B)`` iff ``v`` belongs to
  every critical set, i.e. iff ``v ∈ ker(G)``.

``ker_poly`` itself uses the vertex-deletion rule ``d(G - v) < d(G)``.
"""

from __future__ import annotations

from kecrit.graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    delete_vertices,
    difference,
    induced_subgraph,
    is_independent,
    members,
    neighbors_of,
)
from kecrit.matching import double_cover, hopcroft_karp, max_matching_general


class ConsistencyError(AssertionError):
    """A polynomial routine produced a witness that fails its own contract."""


def _cover_alpha(g: Graph, removed: VertexSet = 0) -> tuple[int, VertexSet]:
    """α of the double cover minus ``removed``, with a maximum independent set.

    ``removed`` and the returned set use cover indices (``v' = v + n``).
    """
    dc = double_cover(g)
    keep = dc.graph.vertices & ~removed
    sub, old_to_new = induced_subgraph(dc.graph, keep)
    left_new = 0
    for old, new in old_to_new.items():
        if old < g.n:
            left_new |= 1 << new
    res = hopcroft_karp(sub, left_new)
    back = members(keep)
    indep = 0
    for v in members(res.independent):
        indep |= 1 << back[v]
    return sub.n - len(res.matching), indep


def critical_difference_poly(g: Graph) -> int:
    """``d(G) = α(B(G)) - n``."""
    a, _ = _cover_alpha(g)
    return a - g.n


def critical_set_poly(g: Graph) -> VertexSet:
    """A critical independent set: ``{v : v ∈ J and v' ∈ J}`` for a maximum
    independent set ``J`` of the double cover."""
    a, j = _cover_alpha(g)
    left, right = j & ((1 << g.n) - 1), j >> g.n
    s = left & right
    d = a - g.n
    if not is_independent(g, s) or difference(g, s) != d:
        raise ConsistencyError(f"critical_set_poly witness has d={difference(g, s)}, expected {d}")
    return s


def _extends_to_critical(g: Graph, t: VertexSet, target: int) -> bool:
    """Whether independent ``t`` is contained in some critical independent set."""
    nb = neighbors_of(g.adj, t)
    a, _ = _cover_alpha(g, nb | (nb << g.n))
    return a == target


def critical_union(g: Graph) -> VertexSet:
    """Union of all critical independent sets."""
    target = critical_difference_poly(g) + g.n
    return sum(1 << v for v in range(g.n) if _extends_to_critical(g, 1 << v, target))


def max_crit_set_poly(g: Graph) -> VertexSet:
    """A maximum critical independent set, lexicographically first by vertex.

    Vertices are committed greedily in increasing order whenever the partial
    set still extends to a critical independent set.  The size is checked
    against ``|X| - μ(G[X])`` with ``X = N[union of critical independent
    sets]``, the König-Egerváry subgraph carried by every maximum critical
    independent set.
    """
    d = critical_difference_poly(g)
    target = d + g.n
    chosen = 0
    blocked = 0
    for v in range(g.n):
        bit = 1 << v
        if blocked & bit:
            continue
        if _extends_to_critical(g, chosen | bit, target):
            chosen |= bit
            blocked |= g.adj[v] | bit
    if difference(g, chosen) != d or not is_independent(g, chosen):
        raise ConsistencyError("greedy set is not a critical independent set")
    x = closed_neighborhood(g, critical_union(g))
    sub, _ = induced_subgraph(g, x)
    expected = sub.n - len(max_matching_general(sub))
    if chosen.bit_count() != expected:
        raise ConsistencyError(
            f"greedy critical set has {chosen.bit_count()} vertices, "
            f"|X| - mu(G[X]) = {expected}"
        )
    return chosen


def alpha_prime_poly(g: Graph) -> int:
    return max_crit_set_poly(g).bit_count()


def ker_poly(g: Graph) -> VertexSet:
    """``v ∈ ker(G)`` iff ``d(G - v) < d(G)``.

    The rule is validated against the exact oracle (every graph with n <= 7)
    rather than derived; :func:`ker_via_cover` is an independent route.
    """
    d = critical_difference_poly(g)
    out = 0
    for v in range(g.n):
        sub, _ = delete_vertices(g, 1 << v)
        if critical_difference_poly(sub) < d:
            out |= 1 << v
    return out


def ker_via_cover(g: Graph) -> VertexSet:
    """``v ∈ ker(G)`` iff removing the left copy of ``v`` lowers ``α(B(G))``.

    The intersection of all critical sets is itself a critical independent
    set, so it coincides with ``ker``; a vertex lies in that intersection iff
    no set avoiding it attains ``d(G)``.
    """
    base, _ = _cover_alpha(g)
    return sum(1 << v for v in range(g.n) if _cover_alpha(g, 1 << v)[0] < base)


def mu(g: Graph) -> int:
    return len(max_matching_general(g))


def is_ke_poly(g: Graph) -> bool:
    """KE iff ``α'(G) + μ(G) = n``: α' ≤ α always, and α' = α on KE graphs."""
    return alpha_prime_poly(g) + mu(g) == g.n
