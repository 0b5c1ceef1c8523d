"""graph6 and edge-list serialization.

graph6 follows McKay's encoding: a size prefix, then the upper triangle of
the adjacency matrix read column by column (``x(0,1), x(0,2), x(1,2),
x(0,3), ...``), packed big-endian into 6-bit groups offset by 63.

The edge-list format is line based::

    # optional comments
    3
    0 1
    1 2
    label 0 a

The first non-comment line is the vertex count; ``label v name`` lines attach
names to vertices.
"""

from __future__ import annotations

from collections.abc import Iterator

from kecrit.errors import ParseError
from kecrit.graph import Graph

FORMATS = ("graph6", "edge-list")
_ALIASES = {"g6": "graph6", "graph6": "graph6", "edges": "edge-list", "edge-list": "edge-list"}
_HEADER = b">>graph6<<"


def normalize_format(fmt: str) -> str:
    try:
        return _ALIASES[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected one of g6, edges") from None


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _decode_n(data: bytes, base: int) -> tuple[int, int]:
    """Return ``(n, offset of first edge byte)``."""

    def chunk(start: int, count: int) -> int:
        if len(data) < start + count:
            raise ParseError("truncated graph6 size field", len(data) + base)
        val = 0
        for i in range(start, start + count):
            c = data[i]
            if not 63 <= c <= 126:
                raise ParseError(f"invalid graph6 byte {c!r}", base + i)
            val = (val << 6) | (c - 63)
        return val

    if not data:
        raise ParseError("empty graph6 string", base)
    if data[0] != 126:
        return chunk(0, 1), 1
    if len(data) > 1 and data[1] == 126:
        return chunk(2, 6), 8
    return chunk(1, 3), 4


def to_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_n(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data: bytes | str, base: int = 0) -> Graph:
    """Decode one graph6 string (no trailing newline).

    ``base`` is added to reported byte offsets, so corpus readers can point at
    the position within the whole file.
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
        base += len(_HEADER)
    n, pos = _decode_n(data, base)
    nslots = n * (n - 1) // 2
    need = (nslots + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}",
            base + pos + min(len(body), need),
        )
    adj = [0] * n
    bit = 0
    i, j = 0, 1
    for k, c in enumerate(body):
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 byte {c!r}", base + pos + k)
        v = c - 63
        for s in range(5, -1, -1):
            if bit >= nslots:
                if v >> s & 1:
                    raise ParseError("non-zero padding bits", base + pos + k)
                continue
            if v >> s & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(adj))


def to_edge_list(g: Graph) -> bytes:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges]
    if g.labels is not None:
        lines += [f"label {v} {s}" for v, s in enumerate(g.labels) if s is not None]
    return ("\n".join(lines) + "\n").encode()


def from_edge_list(data: bytes | str) -> Graph:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    n = None
    edges = []
    labels = {}
    offset = 0
    for raw in data.splitlines(keepends=True):
        here = offset
        offset += len(raw.encode())
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if n is None:
                if len(parts) != 1:
                    raise ParseError("first line must hold the vertex count", here)
                n = int(parts[0])
                if n < 0:
                    raise ParseError("negative vertex count", here)
            elif parts[0] == "label":
                if len(parts) != 3:
                    raise ParseError("label line must be 'label v name'", here)
                v = int(parts[1])
                if not 0 <= v < n:
                    raise ParseError(f"label for vertex {v} out of range", here)
                if v in labels:
                    raise ParseError(f"vertex {v} labelled twice", here)
                labels[v] = parts[2]
            else:
                if len(parts) != 2:
                    raise ParseError("edge line must be 'u v'", here)
                u, v = int(parts[0]), int(parts[1])
                if not (0 <= u < n and 0 <= v < n) or u == v:
                    raise ParseError(f"invalid edge {u} {v} for n={n}", here)
                edges.append((u, v))
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"non-integer token in {line!r}", here) from None
    if n is None:
        raise ParseError("missing vertex count", offset)
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}")
        seen.add(key)
    return Graph.from_edges(n, edges, labels or None)


def parse_graph(data: bytes | str, fmt: str) -> Graph:
    fmt = normalize_format(fmt)
    if fmt == "graph6":
        if isinstance(data, str):
            data = data.encode("ascii")
        return from_graph6(data.strip())
    return from_edge_list(data)


def serialize_graph(g: Graph, fmt: str) -> bytes:
    fmt = normalize_format(fmt)
    return to_graph6(g) if fmt == "graph6" else to_edge_list(g)


def read_graph6_corpus(data: bytes) -> Iterator[Graph]:
    """One graph per line; blank lines are skipped."""
    offset = 0
    for line in data.splitlines(keepends=True):
        body = line.rstrip(b"\r\n")
        if body.strip():
            yield from_graph6(body.strip(), base=offset)
        offset += len(line)


def guess_format(path: str) -> str:
    low = path.lower()
    if low.endswith((".g6", ".graph6")):
        return "graph6"
    return "edge-list"
