"""The three small graphs drawn in the source figures.

Each fixture is a bottom path plus pendant/top vertices.  Vertices carrying a
letter in the drawing use that letter as their label; the remaining ones are
named by position (``b3`` = third bottom vertex, ``t6`` = sixth top vertex).
Single-letter vertices get the lowest indices, in alphabetical order.
"""

from __future__ import annotations

from pathlib import Path

from kecrit.formats import to_edge_list, to_graph6
from kecrit.graph import Graph


def _build(names: list[str], edges: list[tuple[str, str]], letters: dict[str, str]) -> Graph:
    # Single-letter labels first, alphabetically, so index order reads naturally.
    label = {pos: letter for letter, pos in letters.items()}
    for s in names:
        label.setdefault(s, s)
    order = sorted(names, key=lambda s: (len(label[s]) > 1, label[s] if len(label[s]) == 1 else ""))
    index = {s: i for i, s in enumerate(order)}
    labels = {index[s]: label[s] for s in names}
    return Graph.from_edges(len(names), [(index[u], index[v]) for u, v in edges], labels)


def _bottom_path(prefix: str, k: int) -> list[tuple[str, str]]:
    return [(f"{prefix}{i}", f"{prefix}{i + 1}") for i in range(1, k)]


def fig1_g1() -> Graph:
    names = [f"b{i}" for i in range(1, 8)] + [f"t{i}" for i in range(1, 7)]
    edges = _bottom_path("b", 7) + [
        ("t1", "b2"), ("b2", "t2"), ("t3", "b4"), ("t3", "t4"),
        ("b4", "t4"), ("b5", "t5"), ("b6", "t6"), ("t6", "b7"),
    ]
    letters = {"a": "t1", "b": "b1", "c": "t2", "d": "b3", "e": "t3", "f": "t4", "g": "t5", "k": "b5"}
    return _build(names, edges, letters)


def fig2_g() -> Graph:
    """Same graph as :func:`fig1_g1`; the second drawing additionally names ``k``."""
    return fig1_g1()


def fig1_g2() -> Graph:
    names = [f"u{i}" for i in range(1, 7)] + [f"s{i}" for i in range(1, 6)]
    edges = _bottom_path("u", 6) + [
        ("s1", "u2"), ("u2", "s2"), ("u3", "s3"), ("u3", "s4"),
        ("s3", "s4"), ("u5", "s5"), ("s5", "u6"),
    ]
    letters = {"x": "s1", "y": "u1", "z": "s2", "w": "u4"}
    return _build(names, edges, letters)


def fig3_g() -> Graph:
    names = [f"v{i}" for i in range(1, 6)] + ["a", "b", "c", "e"]
    edges = _bottom_path("v", 5) + [
        ("v1", "v3"), ("v1", "a"), ("v2", "a"), ("v3", "a"),
        ("v1", "b"), ("v2", "b"), ("v3", "b"), ("v4", "c"), ("v5", "e"),
    ]
    letters = {"d": "v4", "f": "v5"}
    return _build(names, edges, letters)


FIXTURES = {
    "fig1_g1": fig1_g1,
    "fig1_g2": fig1_g2,
    "fig2_g": fig2_g,
    "fig3_g": fig3_g,
}


def load(name: str) -> Graph:
    try:
        return FIXTURES[name.lower()]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None


def write_fixtures(directory: str | Path) -> list[Path]:
    """Write one ``.edges`` file per fixture plus a ``fixtures.g6`` corpus."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in FIXTURES.items():
        path = directory / f"{name}.edges"
        path.write_bytes(to_edge_list(build()))
        written.append(path)
    corpus = directory / "fixtures.g6"
    graphs = [fig1_g1(), fig1_g2(), fig3_g()]
    corpus.write_bytes(b"".join(to_graph6(g) + b"\n" for g in graphs))
    written.append(corpus)
    return written
