"""Command-line interface.

Exit codes: 0 success, 2 no planar embedding, 3 reduction stuck,
4 invalid input, 1 internal error.  Results go to stdout and are
byte-stable for identical inputs; diagnostics (including the optional
run report) go to stderr as JSON lines.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import io as formats
from .coloring import brute_force_chromatic, replay_coloring, verify_proper
from .errors import FourColorError, NonPlanarError, StuckError
from .graph import EmbeddedGraph, euler_counts, is_mpg
from .mapcolor import color_map
from .ops import OpLog, random_induced_mpg, reduce_to_k4

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_NONPLANAR = 2
EXIT_STUCK = 3
EXIT_INVALID = 4


def _fail(code: int, kind: str, detail: str) -> int:
    sys.stderr.write(formats.stable_dumps({"error": kind, "detail": detail}))
    return code


def _read_json(path: str) -> object:
    return json.loads(Path(path).read_text())


def _load_graph(path: str) -> EmbeddedGraph:
    """Graph JSON, or a plain edge-list text file as a fallback."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        from .embedding import compute_embedding

        return compute_embedding(formats.edgelist_to_edges(text))
    return formats.graph_from_json(doc)


def _digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


# -- subcommands ----------------------------------------------------------------


def _one_color_map(args_tuple) -> tuple[str, dict | None, str]:
    """Worker for color-map; returns (stdout JSON, report or None, dot text)."""
    path, strategy, want_verify, want_dot = args_tuple
    started = time.perf_counter()
    doc = formats.map_from_json(_read_json(path))
    result = color_map(doc, strategy)
    out = formats.stable_dumps(formats.map_coloring_to_json(result))

    report = None
    dot_text = ""
    if want_verify or want_dot:
        from .embedding import compute_embedding
        from .coloring import Coloring

        if result.log is not None:
            edges = doc.borders
            graph = compute_embedding(edges)
            palette_index = {name: i + 1 for i, name in enumerate(result.palette)}
            coloring = Coloring({c: palette_index[result.colors[c]] for c in doc.countries})
            verdict = verify_proper(graph, coloring)
            if want_dot:
                dot_text = formats.graph_to_dot(graph, coloring)
        else:
            verdict = None
            coloring = None
        if want_verify:
            border_ok = all(result.colors[a] != result.colors[b] for a, b in doc.borders)
            steps = len(result.log) if result.log else 0
            report = {
                "input_sha256": _digest(path),
                "countries": len(doc.countries),
                "borders": len(doc.borders),
                "colors_used": list(result.colors_used()),
                "coloring": dict(sorted(result.colors.items())),
                "op_counts": {
                    "creations": steps,
                    "delta_v": steps,
                    "delta_e": 3 * steps,
                    "delta_f": 2 * steps,
                    "added_edges": len(result.triangulation) if result.triangulation else 0,
                },
                "log": formats.oplog_to_json(result.log) if result.log else [],
                "graph_proper": verdict.proper if verdict is not None else True,
                "borders_proper": border_ok,
                "elapsed_s": round(time.perf_counter() - started, 6),
            }
    return out, report, dot_text


def cmd_color_map(args) -> int:
    jobs = max(1, args.jobs)
    work = [(p, args.strategy, args.verify, bool(args.dot)) for p in args.paths]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_one_color_map, work))
    else:
        results = [_one_color_map(w) for w in work]
    for (out, report, dot_text), path in zip(results, args.paths):
        sys.stdout.write(out)
        if report is not None:
            sys.stderr.write(formats.stable_dumps({"report": report}))
        if args.dot and dot_text:
            target = Path(args.dot)
            if len(args.paths) > 1:
                target = target.with_name(f"{Path(path).stem}.{target.name}")
            target.write_text(dot_text)
    return EXIT_OK


def cmd_color_graph(args) -> int:
    from .triangulate import restrict_graph, triangulate

    g = _load_graph(args.path)
    mpg, record = triangulate(g)
    reduced, log = reduce_to_k4(mpg, args.strategy)
    rebuilt, coloring = replay_coloring(reduced, log.reversed())
    restored = restrict_graph(rebuilt, record)
    verdict = verify_proper(restored, coloring)
    doc = formats.coloring_to_json(coloring)
    doc["provenance"] = {
        "triangulation": formats.record_to_json(record),
        "log": formats.oplog_to_json(log),
    }
    doc["proper"] = verdict.proper
    sys.stdout.write(formats.stable_dumps(doc))
    if args.dot:
        Path(args.dot).write_text(formats.graph_to_dot(restored, coloring))
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _load_graph(args.path)
    if not is_mpg(g):
        return _fail(EXIT_INVALID, "invalid-input", "graph is not a maximal planar graph")
    if g.outer_face is None:
        g = g.with_outer(g.faces[0])
    _, log = reduce_to_k4(g, args.strategy)
    sys.stdout.write(formats.stable_dumps(formats.oplog_to_json(log)))
    return EXIT_OK


def cmd_generate(args) -> int:
    g, log = random_induced_mpg(args.n, args.seed)
    doc = {
        "graph": formats.graph_to_json(g),
        "log": formats.oplog_to_json(log),
        "seed": args.seed,
    }
    sys.stdout.write(formats.stable_dumps(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    coloring = formats.coloring_from_json(_read_json(args.coloring), g)
    verdict = verify_proper(g, coloring)
    counts = euler_counts(g)
    sys.stdout.write(
        formats.stable_dumps(
            {
                "proper": verdict.proper,
                "violations": [list(v) for v in verdict.violations],
                "euler": {"F": counts.faces, "V": counts.vertices, "E": counts.edges},
            }
        )
    )
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.path)
    chromatic, witness = brute_force_chromatic(g, max_vertices=args.max_vertices)
    doc = {
        "chromatic_number": chromatic,
        "witness": formats.coloring_to_json(witness)["colors"],
    }
    sys.stdout.write(formats.stable_dumps(doc))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = _load_graph(args.graph)
    coloring = None
    if args.coloring:
        coloring = formats.coloring_from_json(_read_json(args.coloring), g)
    sys.stdout.write(formats.graph_to_dot(g, coloring))
    return EXIT_OK


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourcolor",
        description="Four-coloring toolkit for planar maps and graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_strategy(p):
        p.add_argument(
            "--strategy",
            choices=("trapped-first", "any"),
            default="any",
            help="degree-3 vertex selection order during reduction",
        )

    p = sub.add_parser("color-map", help="color countries of one or more map JSON files")
    p.add_argument("paths", nargs="+", metavar="MAP_JSON")
    add_strategy(p)
    p.add_argument("--verify", action="store_true", help="recheck the result and report on stderr")
    p.add_argument("--dot", metavar="PATH", help="also write a colored DOT rendering")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for multiple inputs")
    p.set_defaults(func=cmd_color_map)

    p = sub.add_parser("color-graph", help="color a planar graph end to end")
    p.add_argument("path", metavar="GRAPH")
    add_strategy(p)
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_color_graph)

    p = sub.add_parser("reduce", help="reduce a maximal planar graph to K4, print the log")
    p.add_argument("path", metavar="GRAPH")
    add_strategy(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", help="grow a random maximal planar graph from K4")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a coloring against a graph")
    p.add_argument("graph", metavar="GRAPH")
    p.add_argument("coloring", metavar="COLORING_JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact chromatic number by backtracking")
    p.add_argument("path", metavar="GRAPH")
    p.add_argument("--max-vertices", type=int, default=16)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export-dot", help="emit a DOT rendering of a graph")
    p.add_argument("graph", metavar="GRAPH")
    p.add_argument("coloring", nargs="?", metavar="COLORING_JSON")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonPlanarError as exc:
        return _fail(EXIT_NONPLANAR, "non-planar", str(exc))
    except StuckError as exc:
        sys.stderr.write(
            formats.stable_dumps(
                {
                    "error": "stuck",
                    "detail": str(exc),
                    "degree_multiset": list(exc.degree_multiset),
                }
            )
        )
        return EXIT_STUCK
    except (FourColorError, json.JSONDecodeError, OSError, KeyError, TypeError, ValueError) as exc:
        return _fail(EXIT_INVALID, "invalid-input", f"{type(exc).__name__}: {exc}")
    except Exception as exc:  # pragma: no cover - internal panic path
        return _fail(EXIT_INTERNAL, "internal", f"{type(exc).__name__}: {exc}")


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
