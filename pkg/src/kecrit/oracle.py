"""Exponential-time ground truth for independence and criticality invariants.

Everything here is computed by enumerating the independent sets of the
graph (and, for the critical difference, optionally all vertex subsets).
Results are cached per graph on an :class:`ExactOracle`; the module-level
functions are thin wrappers for one-off use.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from kecrit.errors import DomainError, SizeLimitError
from kecrit.graph import Graph, VertexSet, closed_neighborhood, induced_subgraph, is_independent

DEFAULT_MAX_N = 16
SUBSET_SCAN_MAX_N = 24
RAW_SUBSET_SCAN_MAX_N = 20
HARD_MAX_N = 64


def oracle_max_n() -> int:
    """Oracle size cap; ``KECRIT_MAX_N`` overrides the default of 16."""
    raw = os.environ.get("KECRIT_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise SizeLimitError(f"KECRIT_MAX_N must be an integer, got {raw!r}") from None
    return min(value, HARD_MAX_N)


def check_size(g: Graph, limit: int | None = None) -> None:
    limit = oracle_max_n() if limit is None else limit
    if g.n > limit:
        raise SizeLimitError(f"exact oracle is limited to n <= {limit}, got n={g.n}")


@dataclass(frozen=True)
class SetFamily:
    """A finite family of vertex sets over one graph.

    The empty family is allowed as a value, but its intersection is
    undefined and raises :class:`DomainError`.
    """

    sets: tuple[VertexSet, ...]

    @classmethod
    def of(cls, sets: Iterable[VertexSet]) -> SetFamily:
        return cls(tuple(sets))

    @cached_property
    def union(self) -> VertexSet:
        out = 0
        for s in self.sets:
            out |= s
        return out

    @cached_property
    def intersection(self) -> VertexSet:
        if not self.sets:
            raise DomainError("intersection of an empty family is undefined")
        out = self.sets[0]
        for s in self.sets[1:]:
            out &= s
        return out

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.sets)

    def __contains__(self, s: VertexSet) -> bool:
        return s in self.sets


def independent_sets_with_neighborhoods(g: Graph) -> list[tuple[VertexSet, VertexSet]]:
    """All ``(S, N(S))`` for independent ``S``, by increasing bitmask.

    Sets containing vertex ``k`` as their highest member are appended after
    all sets below ``2**k``, which keeps the list sorted.
    """
    out = [(0, 0)]
    for k, nb in enumerate(g.adj):
        bit = 1 << k
        out += [(s | bit, ns | nb) for s, ns in out if not s & nb]
    return out


def enumerate_independent_sets(g: Graph) -> Iterator[VertexSet]:
    """Every independent set exactly once, including the empty set."""
    check_size(g, HARD_MAX_N)
    for s, _ in independent_sets_with_neighborhoods(g):
        yield s


def _subset_scan(g: Graph) -> int:
    """max d(X) over all ``2**n`` subsets via an incremental N table."""
    nbr = [0] * (1 << g.n)
    best = 0
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        nb = nbr[mask ^ low] | g.adj[low.bit_length() - 1]
        nbr[mask] = nb
        d = mask.bit_count() - nb.bit_count()
        if d > best:
            best = d
    return best


def _subset_branch_and_bound(g: Graph) -> int:
    """max d(X) over all subsets by include/exclude search.

    Adding vertices raises ``|X|`` by at most the number still undecided while
    ``N(X)`` never shrinks, which gives the pruning bound.
    """
    n = g.n
    adj = g.adj
    best = 0
    stack = [(0, 0, 0)]
    while stack:
        k, size, nb = stack.pop()
        d = size - nb.bit_count()
        if d > best:
            best = d
        if k == n or d + (n - k) <= best:
            continue
        stack.append((k + 1, size, nb))
        stack.append((k + 1, size + 1, nb | adj[k]))
    return best


class ExactOracle:
    """Cached exhaustive computations for one graph."""

    def __init__(self, g: Graph, limit: int | None = None):
        check_size(g, limit)
        self.g = g

    @cached_property
    def _ind(self) -> list[tuple[VertexSet, VertexSet]]:
        return independent_sets_with_neighborhoods(self.g)

    @cached_property
    def independent_sets(self) -> tuple[VertexSet, ...]:
        return tuple(s for s, _ in self._ind)

    @cached_property
    def alpha(self) -> int:
        return max(s.bit_count() for s, _ in self._ind)

    @cached_property
    def omega(self) -> SetFamily:
        a = self.alpha
        return SetFamily(tuple(s for s, _ in self._ind if s.bit_count() == a))

    @property
    def core(self) -> VertexSet:
        return self.omega.intersection

    @property
    def corona(self) -> VertexSet:
        return self.omega.union

    @cached_property
    def critical_independence_difference(self) -> int:
        return max(s.bit_count() - ns.bit_count() for s, ns in self._ind)

    @cached_property
    def critical_difference(self) -> int:
        """max d(X) over every vertex subset; independent of the id(G) path."""
        check_size(self.g, SUBSET_SCAN_MAX_N)
        if self.g.n <= RAW_SUBSET_SCAN_MAX_N:
            return _subset_scan(self.g)
        return _subset_branch_and_bound(self.g)

    @property
    def d(self) -> int:
        # Zhang: d(G) = id(G); the cheap independent-set scan is authoritative.
        return self.critical_independence_difference

    def is_critical(self, x: VertexSet) -> bool:
        """``d(X) = d(G)``; ``X`` need not be independent."""
        nb = 0
        y = x
        adj = self.g.adj
        while y:
            low = y & -y
            nb |= adj[low.bit_length() - 1]
            y ^= low
        return x.bit_count() - nb.bit_count() == self.d

    @cached_property
    def critical_independent_sets(self) -> SetFamily:
        d = self.d
        return SetFamily(
            tuple(s for s, ns in self._ind if s.bit_count() - ns.bit_count() == d)
        )

    @property
    def ker(self) -> VertexSet:
        return self.critical_independent_sets.intersection

    @cached_property
    def max_crit_indep(self) -> SetFamily:
        crit = self.critical_independent_sets.sets
        top = max(s.bit_count() for s in crit)
        return SetFamily(tuple(s for s in crit if s.bit_count() == top))

    @property
    def alpha_prime(self) -> int:
        return self.max_crit_indep.sets[0].bit_count()

    @property
    def nucleus(self) -> VertexSet:
        return self.max_crit_indep.intersection

    @property
    def diadem(self) -> VertexSet:
        return self.max_crit_indep.union

    def is_local_max_ind(self, a: VertexSet) -> bool:
        """``A`` is maximum independent in ``G[N[A]]``."""
        g = self.g
        if not is_independent(g, a):
            raise DomainError("local maximality is defined for independent sets only")
        sub, _ = induced_subgraph(g, closed_neighborhood(g, a))
        return a.bit_count() == ExactOracle(sub, HARD_MAX_N).alpha


def alpha(g: Graph) -> int:
    return ExactOracle(g).alpha


def omega(g: Graph) -> SetFamily:
    return ExactOracle(g).omega


def core(g: Graph) -> VertexSet:
    return ExactOracle(g).core


def corona(g: Graph) -> VertexSet:
    return ExactOracle(g).corona


def critical_difference(g: Graph) -> int:
    return ExactOracle(g, SUBSET_SCAN_MAX_N).critical_difference


def critical_independence_difference(g: Graph) -> int:
    return ExactOracle(g).critical_independence_difference


def critical_independent_sets(g: Graph) -> SetFamily:
    return ExactOracle(g).critical_independent_sets


def ker_oracle(g: Graph) -> VertexSet:
    return ExactOracle(g).ker


def max_crit_indep(g: Graph) -> SetFamily:
    return ExactOracle(g).max_crit_indep


def alpha_prime(g: Graph) -> int:
    return ExactOracle(g).alpha_prime


def nucleus(g: Graph) -> VertexSet:
    return ExactOracle(g).nucleus


def diadem(g: Graph) -> VertexSet:
    return ExactOracle(g).diadem


def is_local_max_ind(g: Graph, a: VertexSet) -> bool:
    return ExactOracle(g).is_local_max_ind(a)
