"""``kecrit`` command line.

Exit codes: 0 success, 1 a verification check reported a VIOLATION,
2 usage, input or size-limit error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path

from kecrit import fixtures, generators
from kecrit.errors import KecritError
from kecrit.formats import (
    from_edge_list,
    guess_format,
    normalize_format,
    read_graph6_corpus,
    to_graph6,
)
from kecrit.graph import Graph
from kecrit.ke import ENGINES, analyze
from kecrit.oracle import oracle_max_n
from kecrit.suite import DEFAULT_SEED, VIOLATION, Summary, run_corpus

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    fmt: str | None = None
    engine: str = "both"
    all_n: int | None = None
    corpus: str | None = None
    seed: int = DEFAULT_SEED
    jobs: int | None = None
    json: bool = False
    output: str | None = None


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _load_graphs(path: str, fmt: str | None) -> list[Graph]:
    fmt = normalize_format(fmt) if fmt else ("edge-list" if path == "-" else guess_format(path))
    data = _read(path)
    if fmt == "graph6":
        return list(read_graph6_corpus(data))
    return [from_edge_list(data)]


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, list):
            value = "{" + ", ".join(str(v) for v in value) + "}"
        elif isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items())
        lines.append(f"{key:28s} {value}")
    return "\n".join(lines) + "\n"


def cmd_analyze(cfg: RunConfig) -> int:
    out = []
    for path in cfg.inputs:
        for g in _load_graphs(path, cfg.fmt):
            if cfg.engine == "oracle" and g.n > oracle_max_n():
                raise KecritError(
                    f"--engine oracle is limited to n <= {oracle_max_n()}, got n={g.n}"
                )
            report = analyze(g, cfg.engine).to_dict(g)
            if cfg.json:
                out.append(json.dumps(report, indent=2) + "\n")
            else:
                out.append(_render_text(report))
    _emit("".join(out), cfg.output)
    return EXIT_OK


def _verify_corpus(cfg: RunConfig) -> Iterator[Graph]:
    if cfg.all_n is not None:
        return generators.all_graphs(cfg.all_n)
    if cfg.corpus is not None:
        graphs = _load_graphs(cfg.corpus, cfg.fmt)
        for g in graphs:
            if g.n > oracle_max_n():
                raise KecritError(f"verify needs the exact oracle; n={g.n} exceeds {oracle_max_n()}")
        return iter(graphs)
    raise KecritError("verify needs --all-n K or --corpus PATH")


def cmd_verify(cfg: RunConfig) -> int:
    graphs = _verify_corpus(cfg)
    summary = Summary()
    for index, report in enumerate(run_corpus(graphs, seed=cfg.seed, jobs=cfg.jobs)):
        summary.add(index, report)
    data = summary.to_dict()
    data["seed"] = cfg.seed
    if cfg.json:
        text = json.dumps(data, indent=2) + "\n"
    else:
        rows = [f"graphs checked: {data['graphs']}  (seed {cfg.seed})"]
        rows.append(f"{'check':22s} {'holds':>8s} {'premise-not-met':>16s} {VIOLATION:>10s}")
        for name, counts in data["checks"].items():
            rows.append(
                f"{name:22s} {counts['holds']:8d} {counts['premise-not-met']:16d} {counts[VIOLATION]:10d}"
            )
        rows.append(f"ker_poly gate: {data['ker_poly_gate']}")
        for v in data["violations"]:
            rows.append(f"VIOLATION {v['check']} on graph #{v['index']} graph6={v['graph6']}")
            rows.append(v["edge_list"].rstrip())
            extra = {k: val for k, val in v.items() if k not in ("check", "index", "graph6", "edge_list")}
            rows.append(json.dumps(extra))
        rows.append("OK" if summary.ok else "FAILED")
        text = "\n".join(rows) + "\n"
    _emit(text, cfg.output)
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_gen(cfg: RunConfig, args: argparse.Namespace) -> int:
    if cfg.all_n is not None:
        graphs = generators.all_graphs(cfg.all_n)
    elif args.kind is None:
        raise KecritError("gen needs a graph kind or --all-n K")
    elif args.kind == "gnp":
        if args.n is None or args.p is None:
            raise KecritError("gnp needs --n and --p")
        graphs = generators.gnp_corpus(args.n, args.p, args.count, cfg.seed)
    elif args.kind == "complete_bipartite":
        if args.a is None or args.b is None:
            raise KecritError("complete_bipartite needs --a and --b")
        graphs = [generators.complete_bipartite(args.a, args.b)]
    else:
        if args.n is None:
            raise KecritError(f"{args.kind} needs --n")
        graphs = [generators.generate(args.kind, {"n": args.n})]
    data = b"".join(to_graph6(g) + b"\n" for g in graphs)
    if cfg.output:
        Path(cfg.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK


def cmd_fixtures(cfg: RunConfig) -> int:
    for path in fixtures.write_fixtures(cfg.output or "fixtures"):
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kecrit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", choices=["g6", "edges"])
        p.add_argument("--json", action="store_true")
        p.add_argument("-o", "--output")

    p = sub.add_parser("analyze", help="report every invariant of one graph")
    p.add_argument("inputs", nargs="+", metavar="PATH", help="graph file, or - for stdin")
    p.add_argument("--engine", choices=ENGINES, default="both")
    common(p)

    p = sub.add_parser("verify", help="run the theorem suite over a corpus")
    p.add_argument("--all-n", type=int)
    p.add_argument("--corpus")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=None)
    common(p)

    p = sub.add_parser("gen", help="write a graph6 corpus")
    p.add_argument("kind", nargs="?", choices=[k for k in generators.KINDS])
    p.add_argument("--all-n", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")

    p = sub.add_parser("fixtures", help="write the figure graphs to a directory")
    p.add_argument("-o", "--output", default="fixtures")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        inputs=getattr(args, "inputs", []),
        fmt=getattr(args, "fmt", None),
        engine=getattr(args, "engine", "both"),
        all_n=getattr(args, "all_n", None),
        corpus=getattr(args, "corpus", None),
        seed=getattr(args, "seed", DEFAULT_SEED),
        jobs=getattr(args, "jobs", None),
        json=getattr(args, "json", False),
        output=getattr(args, "output", None),
    )
    try:
        if cfg.command == "analyze":
            return cmd_analyze(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg)
        if cfg.command == "gen":
            return cmd_gen(cfg, args)
        return cmd_fixtures(cfg)
    except (KecritError, OSError, ValueError, KeyError) as exc:
        print(f"kecrit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
