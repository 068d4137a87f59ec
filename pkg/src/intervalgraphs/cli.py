"""Command-line interface: recognition, counting, construction, and bounds.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 on success, 1 on
domain errors (malformed graph6, infeasible parameters, cap violations),
2 on usage errors.  Domain errors print a single machine-parsable line
``error: <code>: <detail>``.

Output is deterministic byte-for-byte for a fixed configuration, whatever
the worker count: rows are emitted in a canonical order and wall-clock
timing is only included on request (--timing), since a deterministic data
stream cannot carry measurements.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import bounds as bounds_mod
from .canonical import (
    CanonicalSizeError,
    code_hex,
    colored_canonical_form,
    decode_canonical,
)
from .construction import (
    ConstructionParams,
    InfeasibleParametersError,
    build_colored_graph,
    family_size,
    recover_white_indices,
    white_family,
)
from .enumeration import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    _check_cap,
    count_interval_graphs,
    enumerate_interval_graphs,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .recognition import recognize

SCHEMA = 1


@dataclass
class RunConfig:
    """Parsed invocation: one subcommand plus its options."""

    subcommand: str
    graph6_arg: str | None = None
    input_path: str | None = None
    fmt: str = "csv"
    workers: int = 1
    cap: int = DEFAULT_ENUMERATION_CAP
    n: int | None = None
    max_n: int | None = None
    k: int | None = None
    epsilon: Fraction = field(default_factory=lambda: Fraction(1, 4))
    verify: bool = False
    emit: str = "json"
    timing: bool = False
    n_values: list[int] = field(default_factory=list)
    exact_limit: int = 8

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError(f"worker count must be >= 1, got {self.workers}")


def main(argv: list[str] | None = None) -> int:
    try:
        config = build_config(argv)
    except SystemExit as exc:  # argparse --help or usage error
        return int(exc.code or 0)
    return run(config)


def build_config(argv: list[str] | None = None) -> RunConfig:
    args = _parser().parse_args(argv)
    n_values: list[int] = []
    if args.subcommand in ("bounds", "table"):
        n_values = _collect_n_values(args)
    if args.subcommand == "count" and (args.n is None) == (args.max_n is None):
        raise _usage_error("count needs exactly one of --n or --max-n")
    if getattr(args, "workers", 1) < 1:
        raise _usage_error("worker count must be >= 1")
    return RunConfig(
        subcommand=args.subcommand,
        graph6_arg=getattr(args, "graph6", None),
        input_path=getattr(args, "input", None),
        fmt=getattr(args, "format", "csv"),
        workers=getattr(args, "workers", 1),
        cap=getattr(args, "cap", DEFAULT_ENUMERATION_CAP),
        n=getattr(args, "n", None),
        max_n=getattr(args, "max_n", None),
        k=getattr(args, "k", None),
        epsilon=getattr(args, "epsilon", Fraction(1, 4)),
        verify=getattr(args, "verify", False),
        emit=getattr(args, "emit", "json"),
        timing=getattr(args, "timing", False),
        n_values=n_values,
        exact_limit=getattr(args, "exact_limit", 8),
    )


def run(config: RunConfig, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        handler = _HANDLERS[config.subcommand]
        handler(config, out)
        return 0
    except Graph6Error as exc:
        print(f"error: bad-graph6: {exc}", file=err)
    except InfeasibleParametersError as exc:
        print(f"error: infeasible-params: {exc}", file=err)
    except EnumerationCapError as exc:
        print(f"error: over-cap: {exc}", file=err)
    except CanonicalSizeError as exc:
        print(f"error: over-limit: {exc}", file=err)
    except (ValueError, OSError) as exc:
        print(f"error: invalid-input: {exc}", file=err)
    return 1


def _cmd_recognize(config: RunConfig, out) -> None:
    for line in _input_lines(config):
        g = parse_graph6(line)
        result = recognize(g)
        record: dict = {"schema": SCHEMA, "n": g.n, "is_interval": result.is_interval}
        if result.realization is not None:
            record["realization"] = [list(iv) for iv in result.realization]
        if result.reason is not None:
            record["reason"] = result.reason
        print(json.dumps(record, separators=(",", ":")), file=out)


def _cmd_count(config: RunConfig, out) -> None:
    ns = _count_range(config)
    for n in ns:  # fail before emitting anything
        _check_cap(n, config.cap)
    print("n,i_n,matchings,elapsed_ms", file=out)
    for n in ns:
        result = count_interval_graphs(n, workers=config.workers, cap=config.cap)
        elapsed = f"{result.elapsed * 1000:.3f}" if config.timing else ""
        print(f"{result.n},{result.i_n},{result.matchings_visited},{elapsed}", file=out)


def _cmd_enumerate(config: RunConfig, out) -> None:
    if config.n is None:
        raise ValueError("enumerate requires --n")
    codes = enumerate_interval_graphs(config.n, workers=config.workers, cap=config.cap)
    for code in codes:
        if config.fmt == "codes":
            print(code_hex(code), file=out)
        else:
            print(emit_graph6(decode_canonical(code)), file=out)


def _cmd_construct(config: RunConfig, out) -> None:
    if config.n is None or config.k is None:
        raise ValueError("construct requires --n and --k")
    params = ConstructionParams(config.n, config.k, config.epsilon)
    if config.verify:
        _construct_verify(params, out)
        return
    pool = white_family(params).indices()
    for chosen in combinations(pool, params.white_count):
        member = build_colored_graph(params, chosen)
        g6 = emit_graph6(member.graph)
        if config.emit == "graph6":
            print(g6, file=out)
        else:
            record = {
                "schema": SCHEMA,
                "n": params.n,
                "k": params.k,
                "graph6": g6,
                "colors": [c.name.lower() for c in member.colors],
                "whites": [list(w) for w in chosen],
            }
            print(json.dumps(record, separators=(",", ":")), file=out)


def _construct_verify(params: ConstructionParams, out) -> None:
    pool = white_family(params).indices()
    codes = set()
    families = 0
    round_trip_ok = True
    all_interval = True
    for chosen in combinations(pool, params.white_count):
        member = build_colored_graph(params, chosen)
        families += 1
        codes.add(colored_canonical_form(member.colored))
        if recover_white_indices(member) != set(chosen):
            round_trip_ok = False
        if not recognize(member.graph).is_interval:
            all_interval = False
    record = {
        "schema": SCHEMA,
        "n": params.n,
        "k": params.k,
        "families": families,
        "expected_families": family_size(params.n, params.k),
        "distinct_codes": len(codes),
        "round_trip_ok": round_trip_ok,
        "all_interval": all_interval,
    }
    print(json.dumps(record, separators=(",", ":")), file=out)


_CSV_HEADER = "n,k,log_family,construction_lower,factorial_lower,matchings_upper,exact_log_in,ratio,L1,L2,L3"


def _cmd_bounds(config: RunConfig, out) -> None:
    reports = bounds_mod.bounds_table(
        config.n_values,
        k=config.k,
        exact_limit=config.exact_limit,
        workers=config.workers,
    )
    if config.fmt == "json":
        for r in reports:
            record = {
                "schema": SCHEMA,
                "n": r.n,
                "k": r.k,
                "log_family": r.log_family,
                "construction_lower": r.construction_lower,
                "factorial_lower": r.factorial_lower,
                "factorial_exact": r.factorial_exact,
                "matchings_upper": r.matchings_upper,
                "exact_log_in": r.exact_log_in,
                "ratio": r.ratio,
                "L1": r.l1,
                "L2": r.l2,
                "L3": r.l3,
                "error": r.error,
            }
            print(json.dumps(record, separators=(",", ":")), file=out)
        return
    print(_CSV_HEADER, file=out)
    for r in reports:
        cells = [
            str(r.n),
            _fmt_int(r.k),
            _fmt(r.log_family),
            _fmt(r.construction_lower),
            _fmt(r.factorial_lower),
            _fmt(r.matchings_upper),
            _fmt(r.exact_log_in),
            _fmt(r.ratio),
            _fmt_bool(r.l1),
            _fmt_bool(r.l2),
            _fmt_bool(r.l3),
        ]
        print(",".join(cells), file=out)


_HANDLERS = {
    "recognize": _cmd_recognize,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "construct": _cmd_construct,
    "bounds": _cmd_bounds,
    "table": _cmd_bounds,
}


def _fmt(x: float | None) -> str:
    return "" if x is None else format(x, ".12g")


def _fmt_int(x: int | None) -> str:
    return "" if x is None else str(x)


def _fmt_bool(x: bool | None) -> str:
    return "" if x is None else ("true" if x else "false")


def _input_lines(config: RunConfig) -> list[str]:
    if config.graph6_arg is not None:
        return [config.graph6_arg]
    if config.input_path is not None:
        with open(config.input_path, "r", encoding="ascii") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return [line for line in text.splitlines() if line.strip()]


def _count_range(config: RunConfig) -> list[int]:
    if config.n is not None and config.max_n is not None:
        raise ValueError("use either --n or --max-n, not both")
    if config.n is not None:
        return [config.n]
    if config.max_n is not None:
        return list(range(1, config.max_n + 1))
    raise ValueError("count requires --n or --max-n")


def _usage_error(message: str) -> SystemExit:
    print(f"usage error: {message}", file=sys.stderr)
    return SystemExit(2)


def _collect_n_values(args) -> list[int]:
    if args.subcommand == "table":
        return [10**e for e in range(args.min_exp, args.max_exp + 1)]
    sources = [
        args.n is not None,
        args.n_list is not None,
        args.n_range is not None,
    ]
    if sum(sources) != 1:
        raise _usage_error("bounds needs exactly one of --n, --n-list, --n-range")
    if args.n is not None:
        return [args.n]
    if args.n_list is not None:
        try:
            return [int(s) for s in args.n_list.split(",") if s.strip()]
        except ValueError:
            raise _usage_error(f"bad --n-list value {args.n_list!r}")
    parts = args.n_range.split(":")
    if len(parts) not in (2, 3):
        raise _usage_error(f"bad --n-range value {args.n_range!r}")
    try:
        start, stop = int(parts[0]), int(parts[1])
        step = int(parts[2]) if len(parts) == 3 else 1
    except ValueError:
        raise _usage_error(f"bad --n-range value {args.n_range!r}")
    return list(range(start, stop + 1, step))


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervalgraphs",
        description="Recognize, count, construct, and bound unlabeled interval graphs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser(
        "recognize",
        help="decide interval-ness; JSON per input graph with a realization certificate",
    )
    p.add_argument("graph6", nargs="?", help="graph6 string (default: read lines from stdin)")
    p.add_argument("--input", help="file with one graph6 line per graph")

    p = sub.add_parser("count", help="count unlabeled interval graphs; CSV n,i_n,matchings,elapsed_ms")
    p.add_argument("--n", type=int, help="single n")
    p.add_argument("--max-n", type=int, dest="max_n", help="all n from 1 to this value")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.add_argument(
        "--timing",
        action="store_true",
        help="fill the elapsed_ms column (breaks byte-for-byte determinism)",
    )

    p = sub.add_parser("enumerate", help="one representative per class, as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.add_argument("--format", choices=("graph6", "codes"), default="graph6")

    p = sub.add_parser("construct", help="emit or verify the colored lower-bound family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--epsilon", type=Fraction, default=Fraction(1, 4), metavar="P/Q")
    p.add_argument("--verify", action="store_true", help="summary: distinct codes, recovery round-trip, interval check")
    p.add_argument("--emit", choices=("json", "graph6"), default="json")

    p = sub.add_parser("bounds", help="bound report rows for explicit n values")
    p.add_argument("--n", type=int)
    p.add_argument("--n-list", dest="n_list", help="comma-separated n values")
    p.add_argument("--n-range", dest="n_range", help="START:STOP[:STEP], inclusive")
    p.add_argument("--k", type=int, help="anchor count override")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--exact-limit", dest="exact_limit", type=int, default=8,
                   help="include exact ln(i_n) for n up to this value")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("table", help="bound convergence table over powers of ten")
    p.add_argument("--min-exp", dest="min_exp", type=int, default=3)
    p.add_argument("--max-exp", dest="max_exp", type=int, default=8)
    p.add_argument("--k", type=int, help="anchor count override")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--exact-limit", dest="exact_limit", type=int, default=8)
    p.add_argument("--workers", type=int, default=1)

    return parser


if __name__ == "__main__":
    sys.exit(main())
