"""Command line interface: ``helixspan {dist,table,limit,check,compare,plot}``.

Exit codes: 0 success, 1 invariant failure, 2 usage or parse error.
Option defaults can be overridden through ``HELIXSPAN_*`` environment
variables (flags take precedence).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import __version__
from .checks import run_suites
from .compare import compare_distribution
from .diagram import (
    DotBracketError,
    SecondaryStructure,
    bfs_distance,
    iter_structure_lines,
    min_stack_length,
    parse_dot_bracket,
)
from .formats import (
    COMPARISON_HEADER,
    decimal_string,
    limit_to_csv,
    limit_to_json,
    table_to_csv,
    table_to_json,
    write_atomic,
)
from .limitlaw import q_series
from .oracle import SizeLimitExceeded
from .qsqrt5 import QSqrt5
from .svgplot import SchemaMismatch, load_series, render_svg
from .tableaux import beta, census, irreducible_blocks, tableau_distance
from .tables import distance_table

log = logging.getLogger("helixspan")

EXIT_OK, EXIT_INVARIANT, EXIT_USAGE = 0, 1, 2
ENV_PREFIX = "HELIXSPAN_"
DEFAULT_TABLE_CAP = 5000


class UsageError(Exception):
    pass


def _env(name: str, default, cast=str):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError as exc:
        raise UsageError(f"bad value for {ENV_PREFIX}{name}: {raw!r}") from exc


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int
    r: int
    d_max: int | None
    precision_bits: int
    format: str
    output_path: str | None
    input_path: str | None

    def __post_init__(self) -> None:
        if self.r < 1:
            raise UsageError("--r must be at least 1")
        if self.n < 1:
            raise UsageError("--N must be at least 1")
        if self.precision_bits < 53:
            raise UsageError("--precision-bits must be at least 53")


def _emit(text: str, path: str | None) -> None:
    if path:
        write_atomic(path, text)
    else:
        sys.stdout.write(text)


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        n=1 if getattr(args, "N", None) is None else args.N,
        r=getattr(args, "r", 1),
        d_max=getattr(args, "d_max", None),
        precision_bits=args.precision_bits,
        format=args.format,
        output_path=args.out,
        input_path=getattr(args, "input", None),
    )


def _structure_lines(args: argparse.Namespace) -> list[tuple[int, str]]:
    if args.input:
        with open(args.input) as fh:
            return list(iter_structure_lines(fh))
    return list(iter_structure_lines(args.structures))


def cmd_dist(args: argparse.Namespace) -> int:
    lines = _structure_lines(args)
    if not lines:
        raise UsageError("no structures given (use --in PATH or positional dot-bracket strings)")
    records, errors = [], 0
    for lineno, text in lines:
        try:
            s = parse_dot_bracket(text)
        except DotBracketError as exc:
            errors += 1
            print(f"line {lineno}: {type(exc).__name__}: {exc}", file=sys.stderr)
            continue
        t = beta(s)
        d_bfs, d_tab = bfs_distance(s), tableau_distance(t)
        if d_bfs != d_tab:
            print(f"line {lineno}: distance mismatch bfs={d_bfs} tableau={d_tab}", file=sys.stderr)
            return EXIT_INVARIANT
        shortest = min_stack_length(s)
        records.append(
            {
                "line": lineno,
                "n": s.n,
                "distance": d_bfs,
                "distance_tableau": d_tab,
                "irreducibles": len(irreducible_blocks(t)),
                "isolated": census(t).count_plain,
                "min_stack": shortest if shortest is not None else "",
            }
        )
    if args.format == "json":
        _emit(json.dumps(records, indent=1) + "\n", args.out)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(records[0]) if records else ["line"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        _emit(buf.getvalue(), args.out)
    if errors and args.strict:
        return EXIT_USAGE
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if cfg.n > args.cap:
        raise UsageError(f"N={cfg.n} exceeds the cap {args.cap} (raise it with --cap)")
    table = distance_table(cfg.r, cfg.n, d_max=cfg.d_max)
    text = table_to_json(table, args.digits) if cfg.format == "json" else table_to_csv(table, args.digits)
    _emit(text, cfg.output_path)
    return EXIT_OK


def cmd_limit(args: argparse.Namespace) -> int:
    cfg = _config(args)
    D = cfg.d_max if cfg.d_max is not None else 30
    if D < 1:
        raise UsageError("--d-max must be at least 1")
    law = q_series(D)
    if cfg.format == "json":
        text = limit_to_json(law, cfg.precision_bits)
    else:
        text = limit_to_csv(law, cfg.precision_bits)
    _emit(text, cfg.output_path)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    results = run_suites(
        n_max=args.n_max,
        r_set=args.r_set,
        growth_n=args.growth_n,
        tail_d=args.tail_d,
        prec=args.precision_bits,
    )
    passed = all(r["passed"] for r in results)
    _emit(json.dumps({"passed": passed, "suites": results}, indent=1, default=str) + "\n", args.out)
    return EXIT_OK if passed else EXIT_INVARIANT


def _decimal(value: Fraction | QSqrt5, prec: int) -> str:
    if isinstance(value, QSqrt5):
        return mpmath.nstr(value.to_mpf(prec), 12, strip_zeros=True)
    return decimal_string(value)


def cmd_compare(args: argparse.Namespace) -> int:
    structures: list[SecondaryStructure] = []
    with open(args.input) as fh:
        for lineno, text in iter_structure_lines(fh):
            try:
                structures.append(parse_dot_bracket(text))
            except DotBracketError as exc:
                print(f"line {lineno}: {type(exc).__name__}: {exc}", file=sys.stderr)
                if args.strict:
                    return EXIT_USAGE
    reference = None if args.reference == "auto" else args.reference
    d_max = args.d_max if args.d_max is not None else 30
    result = compare_distribution(structures, args.r, reference, d_max, args.limit_n)
    prec = args.precision_bits
    rows = [
        (d, _decimal(emp, prec), _decimal(ref, prec), _decimal(emp - ref, prec)) for d, emp, ref in result.rows
    ]
    if args.format == "json":
        text = json.dumps(
            {
                "reference": result.reference,
                "r": result.r,
                "length": result.length,
                "sample_size": result.sample_size,
                "rows": [dict(zip(COMPARISON_HEADER, (d, float(e), float(f), float(g)))) for d, e, f, g in rows],
            },
            indent=1,
        ) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COMPARISON_HEADER)
        writer.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.out)
    mean_ref = sum(d * float(ref) for d, _, ref in result.rows)
    print(
        f"sample of {result.sample_size}: mean distance {float(result.mean_empirical()):.4f} "
        f"vs reference {mean_ref:.4f} ({result.reference})",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    series = []
    for path in args.input:
        with open(path) as fh:
            series.extend(load_series(fh.read(), n=args.N))
    svg = render_svg(series, allow_empty=args.allow_empty)
    _emit(svg, args.out)
    return EXIT_OK


def _r_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from exc
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("r values must be positive")
    return values


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default=_env("FORMAT", "csv"))
    common.add_argument("--precision-bits", type=int, default=_env("PRECISION_BITS", 100, int))
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="helixspan", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", parents=[common], help="per-structure distances")
    p.add_argument("structures", nargs="*", help="dot-bracket strings")
    p.add_argument("--in", dest="input", metavar="PATH")
    p.add_argument("--strict", action="store_true", help="exit 2 if any line fails to parse")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("table", parents=[common], help="exact distance table w_r(n, d)")
    p.add_argument("--N", "--n", dest="N", type=int, default=_env("N", 100, int))
    p.add_argument("--r", type=int, default=_env("R", 1, int))
    p.add_argument("--d-max", type=int, default=_env("D_MAX", None, int))
    p.add_argument("--cap", type=int, default=_env("CAP", DEFAULT_TABLE_CAP, int))
    p.add_argument("--digits", type=int, default=_env("DIGITS", 12, int))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("limit", parents=[common], help="limit law q(d)")
    p.add_argument("--d-max", type=int, default=_env("D_MAX", None, int))
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("check", parents=[common], help="run the invariant suites")
    p.add_argument("--n", "--N", "--n-max", dest="n_max", type=int, default=_env("N_MAX", 14, int))
    p.add_argument("--r", dest="r_set", type=_r_list, default=(1, 2, 3))
    p.add_argument("--growth-n", type=int, default=2000)
    p.add_argument("--tail-d", type=int, default=60)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compare", parents=[common], help="compare an external structure set")
    p.add_argument("--in", dest="input", metavar="PATH", required=True)
    p.add_argument("--r", type=int, default=_env("R", 1, int))
    p.add_argument("--reference", choices=("auto", "exact-n", "limit"), default="auto")
    p.add_argument("--d-max", type=int, default=_env("D_MAX", None, int))
    p.add_argument("--limit-n", type=int, default=1000, help="proxy length for r > 1 limit references")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("plot", parents=[common], help="SVG chart of table/limit/comparison files")
    p.add_argument("--in", dest="input", metavar="PATH", action="append", required=True)
    p.add_argument("--N", "--n", dest="N", type=int, default=None, help="table row to plot")
    p.add_argument("--allow-empty", action="store_true")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"helixspan: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, DotBracketError, SchemaMismatch, SizeLimitExceeded, OSError, ValueError) as exc:
        print(f"helixspan: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
