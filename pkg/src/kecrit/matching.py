"""Maximum matchings: Hopcroft-Karp with a König cover, Edmonds' blossom
algorithm, a brute-force reference, and the bipartite double cover."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from kecrit.errors import DomainError
from kecrit.graph import Graph, VertexSet, members

UNMATCHED = -1


@dataclass(frozen=True)
class Matching:
    """Pairwise non-incident edges, each stored as ``(u, v)`` with ``u < v``."""

    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_mate(cls, mate: list[int]) -> Matching:
        return cls(tuple((u, v) for u, v in enumerate(mate) if v > u))

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    @property
    def covered(self) -> VertexSet:
        mask = 0
        for u, v in self.edges:
            mask |= 1 << u | 1 << v
        return mask

    def is_valid_for(self, g: Graph) -> bool:
        seen = 0
        for u, v in self.edges:
            if not g.has_edge(u, v):
                return False
            pair = 1 << u | 1 << v
            if seen & pair:
                return False
            seen |= pair
        return True


@dataclass(frozen=True)
class BipartiteResult:
    matching: Matching
    cover: VertexSet
    independent: VertexSet


def _check_bipartition(b: Graph, left: VertexSet) -> VertexSet:
    right = b.vertices & ~left
    for v in members(left):
        if b.adj[v] & left:
            raise DomainError(f"edge inside the left part at vertex {v}")
    for v in members(right):
        if b.adj[v] & right:
            raise DomainError(f"edge inside the right part at vertex {v}")
    return right


def hopcroft_karp(b: Graph, left: VertexSet) -> BipartiteResult:
    """Maximum matching of a bipartite graph plus a König witness.

    ``cover`` is a minimum vertex cover built from the alternating-reachability
    set Z of the free left vertices: ``(L - Z) | (R & Z)``.  Its complement
    ``independent`` is a maximum independent set.
    """
    right = _check_bipartition(b, left)
    lefts = members(left)
    nbrs = {u: members(b.adj[u]) for u in lefts}
    mate = [UNMATCHED] * b.n
    inf = b.n + 1

    while True:
        dist = {}
        queue = deque()
        for u in lefts:
            if mate[u] == UNMATCHED:
                dist[u] = 0
                queue.append(u)
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for w in nbrs[u]:
                x = mate[w]
                if x == UNMATCHED:
                    found = min(found, dist[u] + 1)
                elif x not in dist:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if found == inf:
            break

        # Iterative layered DFS; ptr[u] is the next neighbour index to try.
        ptr = {u: 0 for u in dist}
        for root in lefts:
            if mate[root] != UNMATCHED:
                continue
            path = [root]
            while path:
                u = path[-1]
                adv = False
                while ptr[u] < len(nbrs[u]):
                    w = nbrs[u][ptr[u]]
                    ptr[u] += 1
                    x = mate[w]
                    if x == UNMATCHED:
                        if dist[u] + 1 == found:
                            # Flip the alternating path root .. u - w.
                            for k in range(len(path) - 1, -1, -1):
                                a = path[k]
                                nxt = mate[a]
                                mate[a] = w
                                mate[w] = a
                                w = nxt
                            path = []
                            adv = True
                            break
                    elif dist.get(x) == dist[u] + 1:
                        path.append(x)
                        adv = True
                        break
                if not adv:
                    dist[u] = inf
                    path.pop()

    reach = 0
    stack = [u for u in lefts if mate[u] == UNMATCHED]
    for u in stack:
        reach |= 1 << u
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if reach >> w & 1 or mate[u] == w:
                continue
            reach |= 1 << w
            x = mate[w]
            if x != UNMATCHED and not reach >> x & 1:
                reach |= 1 << x
                stack.append(x)
    cover = (left & ~reach) | (right & reach)
    matching = Matching.from_mate(mate)
    assert cover.bit_count() == len(matching), "König cover size differs from matching size"
    return BipartiteResult(matching, cover, b.vertices & ~cover)


def max_matching_bipartite(b: Graph, left: VertexSet) -> Matching:
    return hopcroft_karp(b, left).matching


def max_matching_general(g: Graph) -> Matching:
    """Edmonds' blossom algorithm with BFS alternating trees, O(n^3)."""
    n = g.n
    nbrs = [members(a) for a in g.adj]
    mate = [UNMATCHED] * n

    # Greedy start cuts down the number of phases.
    for u in range(n):
        if mate[u] == UNMATCHED:
            for w in nbrs[u]:
                if mate[w] == UNMATCHED:
                    mate[u], mate[w] = w, u
                    break

    def find_path(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [UNMATCHED] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == UNMATCHED:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != UNMATCHED and parent[mate[to]] != UNMATCHED):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == UNMATCHED:
                    parent[to] = v
                    if mate[to] == UNMATCHED:
                        return to, parent
                    used[mate[to]] = True
                    queue.append(mate[to])
        return UNMATCHED, parent

    for root in range(n):
        if mate[root] != UNMATCHED:
            continue
        v, parent = find_path(root)
        while v != UNMATCHED:
            pv = parent[v]
            ppv = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = ppv
    return Matching.from_mate(mate)


def max_matching_brute_force(g: Graph) -> int:
    """μ(G) by exhaustive branching on the lowest unmatched vertex."""

    def best(free: VertexSet) -> int:
        while free:
            low = free & -free
            v = low.bit_length() - 1
            rest = free ^ low
            cand = g.adj[v] & rest
            if cand:
                out = best(rest)
                while cand:
                    w = cand & -cand
                    out = max(out, 1 + best(rest ^ w))
                    cand ^= w
                return out
            free = rest
        return 0

    return best(g.vertices)


@dataclass(frozen=True)
class DoubleCover:
    """Bipartite double cover: ``v`` on the left, ``v' = v + n`` on the right,
    and ``v - w'`` is an edge iff ``vw`` is an edge of the base graph."""

    graph: Graph
    n: int

    @property
    def left(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def right(self) -> VertexSet:
        return self.left << self.n

    def split(self, mask: VertexSet) -> tuple[VertexSet, VertexSet]:
        """Project a vertex set of the cover to (left part, right part) in base indices."""
        return mask & self.left, mask >> self.n


def double_cover(g: Graph) -> DoubleCover:
    n = g.n
    adj = [nb << n for nb in g.adj] + list(g.adj)
    return DoubleCover(Graph(2 * n, tuple(adj)), n)
