"""Command-line front end.

Exit codes: 0 success, 1 failed measure verification, 2 input parse or
usage failure, 3 algorithm/input mismatch, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import sys
import time

from .analysis import DEFAULT_WEIGHTS, bounds_table, format_report, load_weights, verify_weights
from .compression import DEFAULT_ALPHA, CompressionConfig, enumerate_compression
from .errors import ParseError, SearchInvariantError, UnsupportedInstanceError
from .hypergraph import Hypergraph, SearchStats, parse_hypergraph, serialize_hypergraph
from .instances import GeneratorSpec, brute_force_enumerate, generate
from .rank3 import enumerate_rank3
from .rankk import enumerate_rankk

ENUM_COMMANDS = ("enumerate", "count", "minimum", "count-minimum", "bench")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transversals",
        description="Enumerate all minimal transversals (minimal hitting sets) of a hypergraph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("enumerate", "print every minimal transversal, one per line"),
        ("count", "print the number of minimal transversals"),
        ("minimum", "print one minimum-cardinality minimal transversal"),
        ("count-minimum", "print the number of minimum-cardinality minimal transversals"),
        ("bench", "run the enumeration, print a summary instead of transversals"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
        p.add_argument(
            "--algorithm",
            choices=("auto", "rank3", "rankk", "compression", "oracle"),
            default="auto",
        )
        p.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help="compression phase split")
        p.add_argument("--stats", action="store_true", help="print node/leaf counters to stderr")
        if name == "enumerate":
            p.add_argument("--canonical", action="store_true", help="buffer and sort the output")

    p = sub.add_parser("generate", help="emit a generated instance in the input format")
    p.add_argument("--kind", choices=("lb", "triangles", "random"), required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify-measure", help="check the branching constraints of a weight table")
    p.add_argument("--weights", default=None, help="weights file (default: built-in table)")
    p.add_argument("--tolerance", type=float, default=1e-6)

    p = sub.add_parser("bounds-table", help="print lower/upper bound bases per rank")
    p.add_argument("--kmax", type=int, required=True)

    return parser


def _read_input(path: str) -> Hypergraph:
    if path == "-":
        return parse_hypergraph(sys.stdin.read())
    with open(path, encoding="utf-8") as handle:
        return parse_hypergraph(handle.read())


def _pick_algorithm(name: str, h: Hypergraph) -> str:
    if name != "auto":
        return name
    rank = h.rank()
    if rank <= 3:
        return "rank3"
    if rank == 4:
        return "compression"
    return "rankk"


def _run_engine(name: str, h: Hypergraph, alpha: float, sink) -> SearchStats:
    if name == "rank3":
        return enumerate_rank3(h, sink)
    if name == "rankk":
        return enumerate_rankk(h, sink)
    if name == "compression":
        if h.rank() > 4:
            raise UnsupportedInstanceError(
                f"rank {h.rank()} input; compression with the default inner engine handles rank <= 4"
            )
        return enumerate_compression(h, sink, CompressionConfig(alpha=alpha))
    if name == "oracle":
        found = brute_force_enumerate(h)
        for t in found:
            sink(t)
        scanned = 1 << h.n
        return SearchStats(nodes=scanned, leaves=scanned, max_depth=0, outputs=len(found))
    raise ValueError(f"unknown algorithm {name!r}")


def _format_transversal(t: frozenset[int]) -> str:
    return " ".join(map(str, sorted(t)))


def _cmd_enumeration(args: argparse.Namespace) -> int:
    h = _read_input(args.input)
    algorithm = _pick_algorithm(args.algorithm, h)
    out = sys.stdout

    if args.command == "enumerate":
        if getattr(args, "canonical", False):
            collected: list[tuple[int, ...]] = []
            stats = _run_engine(algorithm, h, args.alpha, lambda t: collected.append(tuple(sorted(t))))
            for row in sorted(collected):
                out.write(" ".join(map(str, row)) + "\n")
        else:
            stats = _run_engine(algorithm, h, args.alpha, lambda t: out.write(_format_transversal(t) + "\n"))
    elif args.command == "count":
        stats = _run_engine(algorithm, h, args.alpha, lambda t: None)
        out.write(f"{stats.outputs}\n")
    elif args.command == "minimum":
        best: list[frozenset[int]] = []

        def track(t: frozenset[int]) -> None:
            if not best or len(t) < len(best[0]):
                best[:] = [t]

        stats = _run_engine(algorithm, h, args.alpha, track)
        if best:
            out.write(_format_transversal(best[0]) + "\n")
    elif args.command == "count-minimum":
        state = {"size": None, "count": 0}

        def tally(t: frozenset[int]) -> None:
            if state["size"] is None or len(t) < state["size"]:
                state["size"] = len(t)
                state["count"] = 1
            elif len(t) == state["size"]:
                state["count"] += 1

        stats = _run_engine(algorithm, h, args.alpha, tally)
        out.write(f"{state['count']}\n")
    else:  # bench
        started = time.perf_counter()
        stats = _run_engine(algorithm, h, args.alpha, lambda t: None)
        elapsed = time.perf_counter() - started
        out.write(
            f"algorithm={algorithm} n={h.n} edges={len(h.edges)} rank={h.rank()} "
            f"outputs={stats.outputs} nodes={stats.nodes} leaves={stats.leaves} "
            f"max_depth={stats.max_depth}\n"
        )
        sys.stderr.write(f"time_s={elapsed:.3f}\n")

    if args.stats:
        sys.stderr.write(
            f"stats: nodes={stats.nodes} leaves={stats.leaves} "
            f"max_depth={stats.max_depth} outputs={stats.outputs}\n"
        )
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    kind = {"lb": "lower_bound", "triangles": "triangles", "random": "random"}[args.kind]
    if kind == "triangles":
        if args.k not in (None, 2):
            raise ParseError("--kind triangles fixes k at 2")
        spec = GeneratorSpec(kind=kind, k=2, n=args.n)
    elif kind == "lower_bound":
        if args.k is None:
            raise ParseError("--kind lb requires --k")
        spec = GeneratorSpec(kind=kind, k=args.k, n=args.n)
    else:
        if args.k is None or args.m is None:
            raise ParseError("--kind random requires --k and --m")
        spec = GeneratorSpec(kind=kind, k=args.k, n=args.n, m=args.m, seed=args.seed)
    sys.stdout.write(serialize_hypergraph(generate(spec)))
    return 0


def _cmd_verify_measure(args: argparse.Namespace) -> int:
    if args.weights is None:
        weights = DEFAULT_WEIGHTS
    else:
        with open(args.weights, encoding="utf-8") as handle:
            weights = load_weights(handle.read())
    report = verify_weights(weights, tolerance=args.tolerance)
    sys.stdout.write(format_report(report))
    return 0 if report.passed else 1


def _cmd_bounds_table(args: argparse.Namespace) -> int:
    if args.kmax < 2:
        raise ParseError("--kmax must be at least 2")
    sys.stdout.write("k lower upper\n")
    for row in bounds_table(args.kmax):
        scaled = row.upper * 10_000
        digits = 4 if abs(scaled - round(scaled)) < 1e-4 else 7
        sys.stdout.write(f"{row.k} {row.lower:.4f} {row.upper:.{digits}f}\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    try:
        if args.command in ENUM_COMMANDS:
            return _cmd_enumeration(args)
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "verify-measure":
            return _cmd_verify_measure(args)
        return _cmd_bounds_table(args)
    except UnsupportedInstanceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (ParseError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except SearchInvariantError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return 4


def console() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console()
