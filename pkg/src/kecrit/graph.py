"""Simple graphs on dense vertices ``0..n-1`` and vertex-set algebra.

A vertex set is a plain ``int`` bitmask: vertex ``v`` is a member iff bit
``v`` is set.  Union, intersection and difference are ``|``, ``&`` and
``& ~``; ``A & ~B == 0`` tests inclusion.  The helpers below convert to and
from iterables for the boundaries where humans are involved.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from kecrit.errors import GraphInputError

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        if v < 0:
            raise GraphInputError(f"negative vertex {v}")
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def size(mask: VertexSet) -> int:
    return mask.bit_count()


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  ``labels`` is an
    optional per-vertex tuple of names (``None`` for unnamed vertices); it is
    only used by fixtures and report rendering.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str | None, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise GraphInputError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphInputError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise GraphInputError(f"self-loop at vertex {v}")
            for w in members(nb):
                if not self.adj[w] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency {v}-{w}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphInputError("labels length does not match n")
            named = [s for s in self.labels if s is not None]
            if len(set(named)) != len(named):
                raise GraphInputError("vertex labels must be unique")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Mapping[int, str] | None = None,
    ) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphInputError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        lab = None
        if labels:
            for v in labels:
                if not 0 <= v < n:
                    raise GraphInputError(f"label for vertex {v} out of range")
            lab = tuple(labels.get(v) for v in range(n))
        return cls(n, tuple(adj), lab)

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))
        )

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def name(self, v: int) -> str:
        """Label of ``v`` if it has one, else its index as a string."""
        if self.labels is not None and self.labels[v] is not None:
            return self.labels[v]
        return str(v)

    def vertex(self, name: str | int) -> int:
        """Inverse of :meth:`name`; integers pass through after a range check."""
        if isinstance(name, int):
            self._check(1 << name if name >= 0 else -1)
            return name
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        if name.isdigit() and int(name) < self.n:
            return int(name)
        raise GraphInputError(f"unknown vertex {name!r}")

    def vset(self, names: Iterable[str | int]) -> VertexSet:
        return vset(self.vertex(x) for x in names)

    def names(self, mask: VertexSet) -> list[str]:
        return [self.name(v) for v in members(mask)]

    def _check(self, x: VertexSet) -> None:
        if x < 0 or x >> self.n:
            raise GraphInputError(f"vertex set {x:#x} not contained in V(G) for n={self.n}")

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __len__(self) -> int:
        return self.n


def neighbors_of(adj: tuple[int, ...], x: VertexSet) -> VertexSet:
    """Unchecked N(X) for hot loops."""
    out = 0
    while x:
        low = x & -x
        out |= adj[low.bit_length() - 1]
        x ^= low
    return out


def neighborhood(g: Graph, x: VertexSet) -> VertexSet:
    """Vertices adjacent to at least one member of ``x`` (may meet ``x``)."""
    g._check(x)
    return neighbors_of(g.adj, x)


def closed_neighborhood(g: Graph, x: VertexSet) -> VertexSet:
    return neighborhood(g, x) | x


def difference(g: Graph, x: VertexSet) -> int:
    """``|X| - |N(X)|``."""
    return x.bit_count() - neighborhood(g, x).bit_count()


def is_independent(g: Graph, x: VertexSet) -> bool:
    return neighborhood(g, x) & x == 0


def induced_subgraph(g: Graph, x: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Return ``G[X]`` re-indexed to ``0..|X|-1`` and the old-to-new vertex map.

    New indices follow the increasing order of the old ones, so the inverse
    map is simply ``members(x)``.
    """
    g._check(x)
    old = members(x)
    old_to_new = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        nb = 0
        for w in members(g.adj[v] & x):
            nb |= 1 << old_to_new[w]
        adj.append(nb)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[v] for v in old)
    return Graph(len(old), tuple(adj), labels), old_to_new


def lift(mask: VertexSet, old_to_new: Mapping[int, int]) -> VertexSet:
    """Map a vertex set of an induced subgraph back to the parent graph."""
    back = {new: old for old, new in old_to_new.items()}
    return vset(back[v] for v in members(mask))


def delete_vertices(g: Graph, x: VertexSet) -> tuple[Graph, dict[int, int]]:
    """``G - X``."""
    return induced_subgraph(g, g.vertices & ~x)
