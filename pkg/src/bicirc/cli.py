"""Command-line interface.

Subcommands: ``gen`` (emit a graph in the text format), ``analyze`` (per-graph
JSON report with verdicts), ``verify`` (the fixed claim suite), ``search``
(seeded random sweep for positive double circuits).

Exit codes: 0 — success and every verdict passed; 1 — a verdict failed or a
positive double circuit was found, with a witness in the JSON report;
2 — usage, input, or internal error (a JSON error object goes to stderr).
"""

import argparse
import json
import sys
from pathlib import Path

from .analysis import (
    analyze_graph,
    report_failed,
    search_sweep,
    verify_claims,
)
from .errors import (
    GenerationError,
    GraphFormatError,
    InternalInvariantError,
    ResourceLimitError,
)
from .generators import NAMED, GeneratorSpec, build
from .multigraph import Multigraph, format_graph_text, parse_graph_text


def _progress(quiet: bool):
    if quiet:
        return None

    def emit(message: str) -> None:
        print(message, file=sys.stderr, flush=True)

    return emit


def _error(kind: str, message: str, **extra) -> None:
    payload = {"error": kind, "message": message}
    payload.update({k: v for k, v in extra.items() if v is not None})
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=2, sort_keys=True))


def _add_gen_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--gen",
        metavar="NAME[:P1,P2,...]",
        help=f"built-in generator ({', '.join(NAMED)}); e.g. theta:2,3,3 or "
        "random with -n/-m/--seed/--min-girth",
    )
    parser.add_argument("-n", type=int, default=None, help="vertex count (random)")
    parser.add_argument("-m", type=int, default=None, help="edge count (random)")
    parser.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
    parser.add_argument(
        "--min-girth",
        type=int,
        default=None,
        help="resample until girth >= this (random only)",
    )


def _spec_from_args(args) -> GeneratorSpec:
    name, _, raw = args.gen.partition(":")
    try:
        params = tuple(int(p) for p in raw.split(",")) if raw else ()
    except ValueError:
        raise ValueError(f"generator parameters must be integers, got {raw!r}")
    return GeneratorSpec(
        name=name,
        params=params,
        n=args.n,
        m=args.m,
        seed=args.seed,
        min_girth=args.min_girth,
    )


def _load_graph(args) -> tuple[Multigraph, str]:
    if args.gen is not None:
        if args.source is not None:
            raise ValueError("pass either a graph file or --gen, not both")
        return build(_spec_from_args(args)), f"--gen {args.gen}"
    if args.source is None:
        raise ValueError("no input: pass a graph file, '-' for stdin, or --gen NAME")
    if args.source == "-":
        return parse_graph_text(sys.stdin.read(), name="stdin"), "stdin"
    path = Path(args.source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {args.source}: {exc.strerror or exc}")
    return parse_graph_text(text, name=path.name), args.source


def _parse_check_set(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(f"--check-set expects comma-separated edge indices, got {raw!r}")


def cmd_gen(args) -> int:
    if args.gen is None:
        raise ValueError("gen requires --gen NAME")
    graph = build(_spec_from_args(args))
    sys.stdout.write(format_graph_text(graph))
    return 0


def cmd_analyze(args) -> int:
    graph, source = _load_graph(args)
    check_set = _parse_check_set(args.check_set) if args.check_set else None
    report = analyze_graph(
        graph,
        args.enumerator,
        source=source,
        check_set=check_set,
        fixture=args.fixture,
        progress=_progress(args.quiet),
    )
    _emit(report)
    return 1 if report_failed(report) else 0


def cmd_verify(args) -> int:
    claims = [c for c in args.claims.split(",") if c] if args.claims else None
    report = verify_claims(
        claims, inject_fault=args.inject_fault, progress=_progress(args.quiet)
    )
    _emit(report)
    return 0 if report["all_pass"] else 1


def cmd_search(args) -> int:
    report = search_sweep(
        args.n,
        args.m,
        args.min_girth,
        args.count,
        args.seed,
        enumerator=args.enumerator,
        progress=_progress(args.quiet),
    )
    _emit(report)
    return 1 if report["positives_found"] else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicirc",
        description="Double circuits and colines of bicircular matroids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a generated graph as text")
    _add_gen_flags(gen)
    gen.set_defaults(func=cmd_gen)

    analyze = sub.add_parser("analyze", help="analyze one graph, print a JSON report")
    analyze.add_argument(
        "source", nargs="?", help="graph file in the p/e text format, or - for stdin"
    )
    _add_gen_flags(analyze)
    analyze.add_argument(
        "--enumerator",
        choices=("auto", "oracle", "structural"),
        default="auto",
        help="double-circuit enumerator (auto: oracle when m <= 20)",
    )
    analyze.add_argument(
        "--fixture",
        metavar="PATH",
        help="JSON file of frozen census counts: record on first run, compare after",
    )
    analyze.add_argument(
        "--check-set",
        metavar="E1,E2,...",
        help="re-verify one edge set (e.g. a reported witness) on this graph",
    )
    analyze.add_argument("--quiet", action="store_true", help="suppress progress on stderr")
    analyze.set_defaults(func=cmd_analyze)

    verify = sub.add_parser("verify", help="run the fixed verification suite")
    verify.add_argument(
        "--claims",
        metavar="A,B,...",
        help="comma-separated claim names (default: all)",
    )
    verify.add_argument(
        "--inject-fault",
        choices=("dual-rank",),
        default=None,
        help="deliberately corrupt an oracle to demonstrate failure detection",
    )
    verify.add_argument("--quiet", action="store_true", help="suppress progress on stderr")
    verify.set_defaults(func=cmd_verify)

    search = sub.add_parser("search", help="sweep seeded random graphs for positives")
    search.add_argument("-n", type=int, required=True, help="vertices per graph")
    search.add_argument("-m", type=int, required=True, help="edges per graph")
    search.add_argument(
        "--min-girth", type=int, default=5, help="girth floor for sampled graphs (default 5)"
    )
    search.add_argument(
        "--count", type=int, default=100, help="number of graphs (default 100)"
    )
    search.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    search.add_argument(
        "--enumerator",
        choices=("auto", "oracle", "structural"),
        default="structural",
        help="enumerator per graph (default structural)",
    )
    search.add_argument("--quiet", action="store_true", help="suppress progress on stderr")
    search.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        _error("graph-format", str(exc), line=exc.line)
        return 2
    except GenerationError as exc:
        _error("generation", str(exc))
        return 2
    except ResourceLimitError as exc:
        _error("resource-limit", str(exc))
        return 2
    except InternalInvariantError as exc:
        _error("internal", str(exc))
        return 2
    except ValueError as exc:
        _error("usage", str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
