"""Formula and brute-force evaluation of parameter triples.

Each cell runs the closed forms and, when enabled and within the order cap,
the full brute-force pipeline: relations, conjugacy classes, CCC graph,
decomposition, structural spectra and energies, and for graphs within the
matrix cap the characteristic-polynomial spectra of A, L and Q. Cells are
independent and may run on a thread pool; the report is sorted by (p, m, n)
afterwards so worker scheduling never shows in the output.
"""

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TypeVar

from src.config.settings import DEFAULT_MATRIX_CAP, DEFAULT_MAX_ORDER
from src.formulas import (
    ExplicitlyUncovered,
    classify_from_definitions,
    formula_consistency,
    ordering_from_triple,
    thm1_energies,
    thm1_spectra,
    thm1_vertex_count,
    thm2_ordering,
    thm3_classification,
)
from src.graphs import (
    CCCGraph,
    CliqueDecomposition,
    build_ccc,
    decompose,
    predicted_decomposition,
)
from src.groups import (
    ConjugacyClass,
    GroupParams,
    OrderCapExceededError,
    RelationReport,
    check_relations,
    conjugacy_classes,
)
from src.spectra import (
    IntegerMatrix,
    MatrixKind,
    NonIntegralReport,
    SpectrumMultiset,
    char_poly,
    decomposition_energies,
    integer_spectrum,
    matrices_from_graph,
    structural_spectra,
)

from .metrics import SweepMetrics, get_sweep_metrics, time_operation
from .models import Agreement, OracleResult, Spectra, SweepReport, SweepRow

logger = logging.getLogger(__name__)

T = TypeVar("T")

WARN_SWAPPED = "m < n: closed forms evaluated outside m >= n"


@dataclass(frozen=True)
class SweepOptions:
    """Switches shared by every cell of a sweep.

    Attributes:
        oracle: Run the brute-force pipeline
        require_oracle: Fail with OrderCapExceededError instead of skipping
            the oracle for groups above ``oracle_max_order``
        oracle_max_order: Largest group order the oracle enumerates
        matrix_cap: Largest graph handed to the eigenvalue oracle
        workers: Worker threads
    """

    oracle: bool = True
    require_oracle: bool = False
    oracle_max_order: int = DEFAULT_MAX_ORDER
    matrix_cap: int = DEFAULT_MATRIX_CAP
    workers: int = 1


def _timed(
    metrics: SweepMetrics, operation: str, params: GroupParams, func: Callable[[], T]
) -> T:
    return time_operation(operation, metrics, tags={"params": params.label})(func)()


def _eigen_spectra(
    params: GroupParams,
    matrices: tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix],
    matrix_cap: int,
    metrics: SweepMetrics,
) -> tuple[Spectra, bool]:
    """Integer spectra of (A, L, Q) from their characteristic polynomials."""
    spectra: list[SpectrumMultiset] = []
    integral = True
    for kind, matrix in zip(MatrixKind, matrices, strict=True):
        result = integer_spectrum(
            char_poly(matrix, matrix_cap),
            bound=matrix.max_abs_row_sum(),
            kind=kind,
        )
        if isinstance(result, NonIntegralReport):
            integral = False
            metrics.increment("non_integral")
            logger.warning(
                "Non-integral spectrum",
                extra={
                    "params": params.label,
                    "kind": kind.value,
                    "residual_degree": result.residual_degree,
                },
            )
            spectra.append(result.integer_part)
        else:
            spectra.append(result)
    return (spectra[0], spectra[1], spectra[2]), integral


def run_oracle(
    params: GroupParams,
    matrix_cap: int = DEFAULT_MATRIX_CAP,
    max_order: int = DEFAULT_MAX_ORDER,
    metrics: SweepMetrics | None = None,
) -> OracleResult:
    """Brute-force pipeline for one group.

    Raises:
        OrderCapExceededError: If the group order exceeds ``max_order``
    """
    metrics = metrics or get_sweep_metrics()

    def enumerate_group() -> tuple[RelationReport, list[ConjugacyClass]]:
        relations = check_relations(params)
        return relations, conjugacy_classes(params, max_order=max_order)

    relations, classes = _timed(metrics, "oracle_group", params, enumerate_group)

    def graph_stage() -> tuple[CCCGraph, CliqueDecomposition]:
        graph = build_ccc(classes, params)
        return graph, decompose(graph)

    graph, decomposition = _timed(metrics, "oracle_graph", params, graph_stage)
    spectra = structural_spectra(decomposition)
    triple = decomposition_energies(decomposition)
    is_complete = decomposition.num_cliques == 1

    eigen: Spectra | None = None
    super_integral: bool | None = None
    if graph.num_vertices <= matrix_cap:
        eigen, super_integral = _timed(
            metrics,
            "oracle_eigen",
            params,
            lambda: _eigen_spectra(
                params, matrices_from_graph(graph, matrix_cap), matrix_cap, metrics
            ),
        )

    return OracleResult(
        relations_ok=relations.ok,
        center_size=sum(1 for cls in classes if cls.is_central),
        class_sizes=tuple(sorted({cls.size for cls in classes})),
        noncentral_classes=graph.num_vertices,
        decomposition=decomposition,
        spectra=spectra,
        triple=triple,
        ordering=ordering_from_triple(triple),
        classification=classify_from_definitions(triple, is_complete),
        eigen_spectra=eigen,
        super_integral=super_integral,
    )


def compare(row: SweepRow, oracle: OracleResult) -> Agreement:
    """Formula-versus-oracle flags for one row."""
    triple = oracle.triple
    covered = not isinstance(row.classification, ExplicitlyUncovered)
    return Agreement(
        decomposition=row.decomposition == oracle.decomposition,
        spectra=row.spectra == oracle.spectra,
        energies=(row.triple.e, row.triple.le, row.triple.le_plus)
        == (triple.e, triple.le, triple.le_plus),
        ordering=row.ordering.case_id is oracle.ordering,
        classification=(row.classification == oracle.classification)
        if covered
        else None,
        eigen=None
        if oracle.eigen_spectra is None
        else oracle.eigen_spectra == oracle.spectra,
        super_integral=oracle.super_integral,
        gutman=triple.e <= triple.le and triple.le_plus <= triple.le,
        no_border=not oracle.classification.any_border,
        vertex_count=oracle.noncentral_classes == thm1_vertex_count(row.params)
        and oracle.relations_ok,
    )


def evaluate_cell(
    params: GroupParams,
    options: SweepOptions | None = None,
    metrics: SweepMetrics | None = None,
) -> SweepRow:
    """Closed forms for one triple, plus the oracle when enabled.

    Raises:
        OrderCapExceededError: If the oracle is required but the group is
            above the order cap
    """
    options = options or SweepOptions()
    metrics = metrics or get_sweep_metrics()
    warnings: list[str] = []

    def formula_stage() -> SweepRow:
        return SweepRow(
            params=params,
            decomposition=predicted_decomposition(params),
            spectra=thm1_spectra(params),
            triple=thm1_energies(params),
            ordering=thm2_ordering(params),
            classification=thm3_classification(params),
            consistency=formula_consistency(params),
        )

    row = _timed(metrics, "formula", params, formula_stage)

    if not params.in_stated_range:
        warnings.append(WARN_SWAPPED)
        logger.warning(
            "Closed forms used outside m >= n", extra={"params": params.label}
        )
    if isinstance(row.classification, ExplicitlyUncovered):
        warnings.append(f"classification uncovered: {row.classification.reason}")
    if not row.consistency.ok:
        warnings.append("closed forms inconsistent with each other")

    oracle: OracleResult | None = None
    agreement: Agreement | None = None
    if options.oracle:
        if params.order > options.oracle_max_order:
            if options.require_oracle:
                raise OrderCapExceededError(params.order, options.oracle_max_order)
            warnings.append(
                f"oracle skipped: order {params.order} exceeds cap "
                f"{options.oracle_max_order}"
            )
            logger.warning(
                "Oracle skipped by order cap",
                extra={"params": params.label, "order": params.order},
            )
        else:
            oracle = run_oracle(
                params,
                matrix_cap=options.matrix_cap,
                max_order=options.oracle_max_order,
                metrics=metrics,
            )
            if oracle.eigen_spectra is None:
                warnings.append(
                    f"eigen check skipped: {oracle.noncentral_classes} vertices "
                    f"exceed matrix cap {options.matrix_cap}"
                )
            agreement = compare(row, oracle)
            failures = agreement.failures()
            if failures:
                warnings.append("disagreement: " + ", ".join(failures))
                metrics.increment("disagreements")

    metrics.increment("cells")
    return SweepRow(
        params=row.params,
        decomposition=row.decomposition,
        spectra=row.spectra,
        triple=row.triple,
        ordering=row.ordering,
        classification=row.classification,
        consistency=row.consistency,
        oracle=oracle,
        agreement=agreement,
        warnings=tuple(warnings),
    )


def run_sweep(
    triples: Iterable[GroupParams],
    options: SweepOptions | None = None,
    metrics: SweepMetrics | None = None,
) -> SweepReport:
    """Evaluate every triple and return rows sorted by (p, m, n)."""
    options = options or SweepOptions()
    metrics = metrics or get_sweep_metrics()
    cells = list(triples)
    logger.info(
        "Starting sweep",
        extra={"cells": len(cells), "workers": options.workers},
    )

    if options.workers > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as executor:
            rows = list(
                executor.map(
                    lambda params: evaluate_cell(params, options, metrics), cells
                )
            )
    else:
        rows = [evaluate_cell(params, options, metrics) for params in cells]

    report = SweepReport.from_rows(rows)
    logger.info(
        "Finished sweep",
        extra={
            "cells": len(report.rows),
            "failing": len(report.failing_rows()),
            "annotated": len(report.annotated_rows()),
        },
    )
    return report
