#!/usr/bin/env python3
"""
CCC spectra command-line tool

Computes the closed-form spectra and energies of the commuting conjugacy
class graph of G(p, m, n), checks them against brute-force enumeration, and
exports sweep results.

Usage:
    python -m src.reporting compute -p 2 -m 2 -n 2
    python -m src.reporting verify --primes 2,3 --max-order 4096
    python -m src.reporting export --primes 2 --format json -o sweep.json
    python -m src.reporting table --primes 2,3 --m-range 1..4 --n-range 1..4

Exit codes:
    0  every checked row agrees
    1  a mathematical disagreement was found
    2  usage error (bad parameters, malformed grid, unwritable output)
    3  the oracle was required but a group exceeds the order cap
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from typing import TextIO

from src.config import (
    ConfigurationError,
    ConfigurationValidationError,
    resolve_settings,
)
from src.formulas import ExplicitlyUncovered
from src.groups import GroupError, OrderCapExceededError, make_params

from .exceptions import ReportingError
from .export import export, format_fraction
from .grid import build_grid
from .logging_setup import configure_logging
from .metrics import SweepMetrics
from .models import SweepReport, SweepRow
from .sweep import SweepOptions, evaluate_cell, run_sweep

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_ORACLE_CAP = 3


def _add_runtime_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--oracle",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Run the brute-force pipeline (default: on)",
    )
    parser.add_argument(
        "--require-oracle",
        action="store_true",
        help="Exit 3 instead of skipping the oracle when a group is too large",
    )
    parser.add_argument(
        "--matrix-cap",
        type=int,
        help="Largest graph handed to the eigenvalue oracle (env: CCC_MATRIX_CAP)",
    )
    parser.add_argument(
        "--format", choices=("csv", "json"), help="Machine-readable output format"
    )
    parser.add_argument("-o", "--output", help="Write machine output to this file")


def _add_grid_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--primes", help="Comma-separated primes, e.g. 2,3,5")
    parser.add_argument("--m-range", help="Range of m, e.g. 1..4")
    parser.add_argument("--n-range", help="Range of n, e.g. 1..3")
    parser.add_argument(
        "--max-order",
        type=int,
        help="Largest group order included in the grid (default: 4096)",
    )
    parser.add_argument(
        "--include-swapped",
        action="store_true",
        default=None,
        help="Also sweep triples with m < n",
    )
    parser.add_argument("--grid-file", help="YAML file with grid fields")
    parser.add_argument(
        "--workers", type=int, help="Worker threads for sweep cells (env: CCC_WORKERS)"
    )
    parser.add_argument(
        "--stats", action="store_true", help="Print timing statistics to stderr"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccc-spectra",
        description="Spectra and energies of CCC graphs of G(p, m, n)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # One group, closed forms plus brute force
  python -m src.reporting compute -p 2 -m 2 -n 2

  # Verification sweep over small groups
  python -m src.reporting verify --primes 2,3 --max-order 4096

  # Export a sweep as JSON
  python -m src.reporting export --primes 2 --format json -o sweep.json
        """,
    )
    parser.add_argument("--log-level", help="Logging level (env: CCC_LOG_LEVEL)")
    parser.add_argument(
        "--log-json",
        action="store_true",
        default=None,
        help="Emit JSON log lines (env: CCC_LOG_JSON)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="Evaluate one parameter triple")
    compute.add_argument("-p", type=int, required=True, help="Prime p")
    compute.add_argument("-m", type=int, required=True, help="Exponent m")
    compute.add_argument("-n", type=int, required=True, help="Exponent n")
    compute.add_argument(
        "--canonicalize",
        action="store_true",
        help="Swap m and n when m < n (G(p,m,n) is isomorphic to G(p,n,m))",
    )
    compute.add_argument(
        "--max-order",
        type=int,
        help="Largest group order the oracle enumerates (env: CCC_MAX_ORDER)",
    )
    _add_runtime_flags(compute)

    for name, help_text in (
        ("verify", "Check closed forms against brute force over a grid"),
        ("export", "Write sweep results as CSV or JSON"),
    ):
        sub = commands.add_parser(name, help=help_text)
        _add_grid_flags(sub)
        _add_runtime_flags(sub)

    table = commands.add_parser(
        "table", help="Print the ordering and classification table (no oracle)"
    )
    _add_grid_flags(table)
    return parser


def _flag(value: bool | None) -> str:
    return "-" if value is None else ("yes" if value else "no")


def describe_row(row: SweepRow, out: TextIO) -> None:
    """Human-readable summary of one row."""
    params = row.params
    canon = " (canonicalized)" if params.canonicalized else ""
    out.write(f"{params.label}{canon}  order {params.order}\n")
    triple = row.triple
    out.write(
        f"  formula: |V|={triple.num_vertices} |e|={triple.num_edges} "
        f"decomposition {row.decomposition}\n"
    )
    out.write(
        f"           E={format_fraction(triple.e)} LE={format_fraction(triple.le)} "
        f"LE+={format_fraction(triple.le_plus)} ordering {row.ordering.case_id.value}\n"
    )
    if isinstance(row.classification, ExplicitlyUncovered):
        out.write("           classification: uncovered\n")
    else:
        c = row.classification
        out.write(
            f"           hyper={_flag(c.hyperenergetic)} "
            f"L-hyper={_flag(c.l_hyperenergetic)} "
            f"Q-hyper={_flag(c.q_hyperenergetic)} "
            f"border={_flag(c.any_border)} baseline={format_fraction(c.baseline)}\n"
        )
    if row.oracle is not None:
        o = row.oracle
        out.write(
            f"  oracle:  |V|={o.triple.num_vertices} |e|={o.triple.num_edges} "
            f"decomposition {o.decomposition} |Z|={o.center_size}\n"
        )
        out.write(
            f"           E={format_fraction(o.triple.e)} "
            f"LE={format_fraction(o.triple.le)} "
            f"LE+={format_fraction(o.triple.le_plus)} ordering {o.ordering.value} "
            f"super-integral={_flag(o.super_integral)}\n"
        )
        out.write(f"  agrees:  {_flag(row.oracle_agrees)}\n")
    for warning in row.warnings:
        out.write(f"  warning: {warning}\n")


def describe_table(report: SweepReport, out: TextIO) -> None:
    header = (
        f"{'p':>3} {'m':>3} {'n':>3}  {'ordering':<16} "
        f"{'hyper':<5} {'L-hyper':<7} {'Q-hyper':<7} border\n"
    )
    out.write(header)
    for row in report.rows:
        params = row.params
        prefix = f"{params.p:>3} {params.m:>3} {params.n:>3}  "
        case = row.ordering.case_id.value
        if isinstance(row.classification, ExplicitlyUncovered):
            out.write(f"{prefix}{case:<16} uncovered\n")
            continue
        c = row.classification
        out.write(
            f"{prefix}{case:<16} {_flag(c.hyperenergetic):<5} "
            f"{_flag(c.l_hyperenergetic):<7} {_flag(c.q_hyperenergetic):<7} "
            f"{_flag(c.any_border)}\n"
        )


def _emit(report: SweepReport, args: argparse.Namespace, out: TextIO) -> None:
    if args.format is None and args.output is None:
        return
    export(report, args.format or "csv", path=args.output, stream=out)


def cmd_compute(args: argparse.Namespace, out: TextIO) -> int:
    settings = resolve_settings(
        max_order=args.max_order, matrix_cap=args.matrix_cap
    )
    params = make_params(
        args.p, args.m, args.n, canonicalize=args.canonicalize, max_order=None
    )
    options = SweepOptions(
        oracle=args.oracle,
        require_oracle=args.require_oracle,
        oracle_max_order=settings.max_order,
        matrix_cap=settings.matrix_cap,
    )
    row = evaluate_cell(params, options, SweepMetrics())
    report = SweepReport.from_rows([row])
    describe_row(row, sys.stderr if args.format and not args.output else out)
    _emit(report, args, out)
    return EXIT_OK


def _sweep(args: argparse.Namespace, oracle: bool) -> tuple[SweepReport, SweepMetrics]:
    settings = resolve_settings(
        matrix_cap=getattr(args, "matrix_cap", None), workers=args.workers
    )
    _, triples = build_grid(
        args.grid_file,
        primes=args.primes,
        m_range=args.m_range,
        n_range=args.n_range,
        max_order=args.max_order,
        include_swapped=args.include_swapped,
    )
    options = SweepOptions(
        oracle=oracle,
        require_oracle=getattr(args, "require_oracle", False),
        oracle_max_order=settings.max_order,
        matrix_cap=settings.matrix_cap,
        workers=settings.workers,
    )
    metrics = SweepMetrics()
    report = run_sweep(triples, options, metrics)
    if args.stats:
        sys.stderr.write(json.dumps(metrics.get_summary(), indent=2) + "\n")
    return report, metrics


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    report, _ = _sweep(args, args.oracle)
    summary = sys.stderr if args.format and not args.output else out
    for row in report.rows:
        if row.warnings or not row.passes:
            describe_row(row, summary)
    checked = sum(1 for row in report.rows if row.agreement is not None)
    summary.write(
        f"{len(report.rows)} triples, {checked} checked against brute force, "
        f"{len(report.failing_rows())} failing\n"
    )
    _emit(report, args, out)
    return report.exit_code


def cmd_export(args: argparse.Namespace, out: TextIO) -> int:
    report, _ = _sweep(args, args.oracle)
    export(report, args.format or "csv", path=args.output, stream=out)
    return EXIT_OK


def cmd_table(args: argparse.Namespace, out: TextIO) -> int:
    report, _ = _sweep(args, oracle=False)
    describe_table(report, out)
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "export": cmd_export,
    "table": cmd_table,
}


def _error(e: Exception) -> None:
    message = f"error: {e}"
    if isinstance(e, ConfigurationValidationError) and e.fields:
        message += " (" + ", ".join(e.fields) + ")"
    sys.stderr.write(message + "\n")


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    """CLI entry point; returns the process exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = resolve_settings(log_level=args.log_level, log_json=args.log_json)
    except ConfigurationError as e:
        _error(e)
        return EXIT_USAGE
    configure_logging(settings.log_level, settings.log_json)

    try:
        return COMMANDS[args.command](args, out)
    except OrderCapExceededError as e:
        _error(e)
        return EXIT_ORACLE_CAP
    except (GroupError, ConfigurationError, ReportingError) as e:
        _error(e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
