"""Sweeps, reports, exports and the command-line driver.

Example usage:
    from src.reporting import SweepOptions, build_grid, run_sweep

    _, triples = build_grid(primes="2,3", max_order=4096)
    report = run_sweep(triples, SweepOptions())
"""

from .exceptions import ExportError, GridSpecError, ReportingError
from .export import (
    CSV_COLUMNS,
    export,
    parse_record,
    read_csv,
    render,
    row_to_record,
)
from .grid import GridSpec, build_grid, parse_range
from .logging_setup import configure_logging
from .metrics import SweepMetrics, TimingMetric, get_sweep_metrics, time_operation
from .models import Agreement, OracleResult, SweepReport, SweepRow
from .sweep import SweepOptions, compare, evaluate_cell, run_oracle, run_sweep

__all__ = [
    "CSV_COLUMNS",
    "Agreement",
    "ExportError",
    "GridSpec",
    "GridSpecError",
    "OracleResult",
    "ReportingError",
    "SweepMetrics",
    "SweepOptions",
    "SweepReport",
    "SweepRow",
    "TimingMetric",
    "build_grid",
    "compare",
    "configure_logging",
    "evaluate_cell",
    "export",
    "get_sweep_metrics",
    "parse_range",
    "parse_record",
    "read_csv",
    "render",
    "row_to_record",
    "run_oracle",
    "run_sweep",
    "time_operation",
]
