"""CSV and JSON serialisation of sweep reports.

Both formats carry the same fields in the same fixed order. Energies are
written as exact ``numerator/denominator`` strings (``"8/1"``, never
``"8"`` or ``"8.0"``), booleans as ``true``/``false`` and missing values as
empty strings, so repeated exports of the same report are byte-identical.
All values come from the closed forms; the oracle contributes the
``super_integral`` and ``oracle_agrees`` flags and any disagreement
warnings.
"""

import csv
import io
import json
import logging
from collections.abc import Iterable
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal, TextIO

from src.formulas import ExplicitlyUncovered

from .exceptions import ExportError
from .models import SweepReport, SweepRow

logger = logging.getLogger(__name__)

ExportFormat = Literal["csv", "json"]

CSV_COLUMNS = (
    "p",
    "m",
    "n",
    "order",
    "num_vertices",
    "num_edges",
    "decomposition",
    "E",
    "LE",
    "LE_plus",
    "ordering_case",
    "hyper",
    "border",
    "l_hyper",
    "l_border",
    "q_hyper",
    "q_border",
    "super_integral",
    "oracle_agrees",
    "warnings",
)

_FLAG_COLUMNS = ("hyper", "border", "l_hyper", "l_border", "q_hyper", "q_border")
_INT_COLUMNS = ("p", "m", "n", "order", "num_vertices", "num_edges")
_FRACTION_COLUMNS = ("E", "LE", "LE_plus")
_BOOL_COLUMNS = (*_FLAG_COLUMNS, "super_integral", "oracle_agrees")

WARNING_SEPARATOR = "; "


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    numerator, _, denominator = text.partition("/")
    return Fraction(int(numerator), int(denominator or 1))


def format_bool(value: bool | None) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def parse_bool(text: str) -> bool | None:
    if text == "":
        return None
    if text in ("true", "false"):
        return text == "true"
    raise ExportError(f"invalid boolean field {text!r}", details={"value": text})


def row_to_record(row: SweepRow) -> dict[str, str]:
    """Serialise one row to the fixed column set."""
    flags: tuple[bool | None, ...]
    if isinstance(row.classification, ExplicitlyUncovered):
        flags = (None,) * len(_FLAG_COLUMNS)
    else:
        flags = row.classification.flags()

    record = {
        "p": str(row.params.p),
        "m": str(row.params.m),
        "n": str(row.params.n),
        "order": str(row.params.order),
        "num_vertices": str(row.triple.num_vertices),
        "num_edges": str(row.triple.num_edges),
        "decomposition": str(row.decomposition),
        "E": format_fraction(row.triple.e),
        "LE": format_fraction(row.triple.le),
        "LE_plus": format_fraction(row.triple.le_plus),
        "ordering_case": row.ordering.case_id.value,
        "super_integral": format_bool(row.super_integral),
        "oracle_agrees": format_bool(row.oracle_agrees),
        "warnings": WARNING_SEPARATOR.join(row.warnings),
    }
    for name, flag in zip(_FLAG_COLUMNS, flags, strict=True):
        record[name] = format_bool(flag)
    return {column: record[column] for column in CSV_COLUMNS}


def parse_record(record: dict[str, str]) -> dict[str, Any]:
    """Typed values of one serialised record.

    Raises:
        ExportError: If a column is missing or malformed
    """
    missing = [column for column in CSV_COLUMNS if column not in record]
    if missing:
        raise ExportError(f"missing columns: {missing}", details={"missing": missing})
    try:
        parsed: dict[str, Any] = {
            column: int(record[column]) for column in _INT_COLUMNS
        }
        parsed.update(
            {column: parse_fraction(record[column]) for column in _FRACTION_COLUMNS}
        )
    except (ValueError, ZeroDivisionError) as e:
        raise ExportError(f"malformed numeric field: {e}") from e
    parsed.update({column: parse_bool(record[column]) for column in _BOOL_COLUMNS})
    parsed["decomposition"] = record["decomposition"]
    parsed["ordering_case"] = record["ordering_case"]
    parsed["warnings"] = (
        record["warnings"].split(WARNING_SEPARATOR) if record["warnings"] else []
    )
    return parsed


def render_csv(rows: Iterable[SweepRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row_to_record(row))
    return buffer.getvalue()


def render_json(rows: Iterable[SweepRow]) -> str:
    payload = {"columns": list(CSV_COLUMNS), "rows": [row_to_record(r) for r in rows]}
    return json.dumps(payload, indent=2) + "\n"


def render(report: SweepReport, fmt: ExportFormat) -> str:
    if fmt == "csv":
        return render_csv(report.rows)
    if fmt == "json":
        return render_json(report.rows)
    raise ExportError(f"unknown export format {fmt!r}", details={"format": fmt})


def export(
    report: SweepReport,
    fmt: ExportFormat = "csv",
    path: str | Path | None = None,
    stream: TextIO | None = None,
) -> str:
    """Write a report to ``path``, or to ``stream`` when no path is given.

    Args:
        report: Sweep report
        fmt: ``"csv"`` or ``"json"``
        path: Destination file
        stream: Destination stream used when ``path`` is None

    Returns:
        The serialised text

    Raises:
        ExportError: If the destination cannot be written
    """
    text = render(report, fmt)
    if path is None:
        if stream is not None:
            stream.write(text)
        return text

    destination = Path(path)
    try:
        with open(destination, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise ExportError(
            f"cannot write report: {e}", path=str(destination)
        ) from e
    logger.info(
        "Exported report",
        extra={"path": str(destination), "format": fmt, "rows": len(report.rows)},
    )
    return text


def read_csv(source: str | Path | TextIO) -> list[dict[str, str]]:
    """Read an exported CSV back into records.

    Raises:
        ExportError: If the file cannot be read or its header is wrong
    """
    try:
        if isinstance(source, str | Path):
            with open(source, encoding="utf-8", newline="") as f:
                return _read_records(f, str(source))
        return _read_records(source, None)
    except OSError as e:
        raise ExportError(f"cannot read report: {e}", path=str(source)) from e


def _read_records(handle: TextIO, path: str | None) -> list[dict[str, str]]:
    reader = csv.DictReader(handle)
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ExportError(
            "unexpected CSV header",
            path=path,
            details={"header": list(reader.fieldnames or ())},
        )
    return [dict(record) for record in reader]
