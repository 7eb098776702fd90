"""Command-line front end.

Exit codes: 0 success (no violations), 1 violation, counterexample or
out-of-class input, 2 usage or input/output error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from dataclasses import dataclass

from . import __version__
from .degree2 import MissingLowDegreeVertex, three_color
from .enumeration import FILTER_NAMES, CapExceeded, enumerate_graphs
from .formats import FormatError, decode_graph6, encode_graph6, parse_edgelist
from .graph import Graph, Hole, triangle_witness
from .harness import HUNTS, SUITES, UnknownSuite, hunt, run_suite
from .recognition import BudgetExceeded, contains_isk4, contains_k33, contains_prism, profile
from .wheels import OutOfClass, TheoremViolation, decompose


@dataclass(frozen=True)
class GraphRecord:
    id: str
    graph: Graph
    source: str


def read_records(path: str, kind: str = "auto") -> list[GraphRecord]:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    base = os.path.basename(path)
    if kind == "auto":
        kind = "edgelist" if _looks_like_edgelist(text) else "graph6"
    if kind == "edgelist":
        return [GraphRecord(base, parse_edgelist(text), path)]
    records = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        try:
            g = decode_graph6(line)
        except FormatError as exc:
            raise FormatError(f"{path}:{lineno}: {exc}") from None
        records.append(GraphRecord(f"{base}:{lineno}", g, f"{path}:{lineno}"))
    return records


def _looks_like_edgelist(text: str) -> bool:
    for line in text.splitlines():
        fields = line.split()
        if not fields or line.startswith("#"):
            continue
        return len(fields) == 2
    return False


def jsonable(obj):
    """Plain JSON data for witnesses: vertex sets become sorted lists."""
    if isinstance(obj, Graph):
        return {"n": obj.n, "edges": [list(e) for e in obj.edges()], "graph6": encode_graph6(obj)}
    if isinstance(obj, Hole):
        return list(obj.cycle)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, (frozenset, set)):
        return sorted(jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    return obj


def _witness_of(exc: OutOfClass):
    w = exc.witness
    return jsonable(list(w) if isinstance(w, tuple) else w)


# -- subcommands -------------------------------------------------------------------------


def cmd_analyze(args) -> tuple[dict, int]:
    results = []
    for rec in read_records(args.file, args.input):
        g = rec.graph
        prof = profile(g, args.budget)
        results.append({
            "id": rec.id,
            "n": g.n,
            "profile": jsonable(prof),
            "witnesses": {
                "triangle": jsonable(triangle_witness(g)),
                "isk4": jsonable(contains_isk4(g, args.budget)),
                "k33": jsonable(contains_k33(g)),
                "prism": jsonable(contains_prism(g, args.budget)),
            },
        })
    return {"command": "analyze", "results": results}, 0


def cmd_decompose(args) -> tuple[dict, int]:
    results = []
    code = 0
    for rec in read_records(args.file, args.input):
        try:
            out = decompose(rec.graph, args.budget)
            results.append({"id": rec.id, "status": "ok", "outcome": out.tag,
                            "fallback": out.fallback, "witness": jsonable(out.witness)})
        except OutOfClass as exc:
            code = 1
            results.append({"id": rec.id, "status": "out_of_class", "reason": str(exc), "witness": _witness_of(exc)})
        except TheoremViolation as exc:
            code = 1
            results.append({"id": rec.id, "status": "theorem_violation", "reason": str(exc), "witness": None})
    return {"command": "decompose", "results": results}, code


def cmd_color(args) -> tuple[dict, int]:
    results = []
    code = 0
    for rec in read_records(args.file, args.input):
        try:
            c = three_color(rec.graph, args.budget)
            results.append({"id": rec.id, "status": "ok", "coloring": list(c.color)})
        except OutOfClass as exc:
            code = 1
            results.append({"id": rec.id, "status": "out_of_class", "reason": str(exc), "witness": _witness_of(exc)})
        except MissingLowDegreeVertex as exc:
            code = 1
            results.append({"id": rec.id, "status": "counterexample", "reason": str(exc),
                            "witness": jsonable(exc.graph)})
    return {"command": "color", "results": results}, code


def cmd_verify(args) -> tuple[dict, int]:
    report = run_suite(args.suite, n_max=args.n, corpus=args.corpus, jobs=args.jobs)
    payload = {"command": "verify", **report.to_dict(timing=args.timing)}
    return payload, 0 if report.ok else 1


def cmd_hunt(args) -> tuple[dict, int]:
    report = hunt(args.conjecture, args.n, jobs=args.jobs)
    payload = {"command": "hunt", **report.to_dict(timing=args.timing)}
    return payload, 0 if report.ok else 1


def cmd_gen(args) -> tuple[dict, int]:
    graphs = [encode_graph6(g) for g in enumerate_graphs(args.n, args.filter or (), cap=args.cap)]
    return {"command": "gen", "n": args.n, "filters": list(args.filter or ()), "graphs": graphs}, 0


# -- output ------------------------------------------------------------------------------------


def _text_lines(obj, prefix: str = "") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            key = f"{prefix}.{k}" if prefix else str(k)
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.extend(_text_lines(v, key))
            else:
                lines.append(f"{key}: {json.dumps(v)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for i, v in enumerate(obj):
            lines.extend(_text_lines(v, f"{prefix}[{i}]"))
        return lines
    return [f"{prefix}: {json.dumps(obj)}"]


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat_list(x) for x in v)


def emit(payload: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if payload.get("command") == "gen" and fmt == "text":
        for g6 in payload["graphs"]:
            stream.write(g6 + "\n")
        return
    if fmt == "json":
        stream.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        stream.write("\n".join(_text_lines(payload)) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for suites and hunts")
    common.add_argument("--budget", type=int, default=10**8, help="backtracking node budget for ISK4 search")
    common.add_argument("--timing", action="store_true", help="include wall time in reports")

    parser = argparse.ArgumentParser(
        prog="isk4lab",
        description="Recognise, decompose and 3-color triangle-free graphs with no induced subdivision of K4, "
        "and run exhaustive checks over small graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_text in (
        ("analyze", cmd_analyze, "class profile and witnesses per graph"),
        ("decompose", cmd_decompose, "decomposition outcome per graph"),
        ("color", cmd_color, "3-coloring per graph"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file")
        p.add_argument("--input", choices=("auto", "graph6", "edgelist"), default="auto")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", parents=[common], help="run a falsification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    src = p.add_mutually_exclusive_group()
    src.add_argument("--n", type=int, default=None, help="largest order to enumerate")
    src.add_argument("--corpus", default=None, help="graph6 file to scan instead")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", parents=[common], help="search for conjecture counterexamples")
    p.add_argument("conjecture", choices=sorted(HUNTS))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("gen", parents=[common], help="emit graph6 for all graphs of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", action="append", choices=FILTER_NAMES)
    p.add_argument("--cap", type=int, default=None, help="override the enumeration cap")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, code = args.func(args)
    except (OSError, FormatError, CapExceeded, UnknownSuite, BudgetExceeded) as exc:
        print(f"isk4lab: error: {exc}", file=sys.stderr)
        return 2
    emit(payload, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
