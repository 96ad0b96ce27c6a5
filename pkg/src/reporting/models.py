"""Per-triple sweep results and the report that collects them."""

from dataclasses import dataclass, field

from src.formulas import (
    EnergyOrdering,
    ExplicitlyUncovered,
    FormulaConsistency,
    HyperClassification,
    OrderingCase,
)
from src.graphs import CliqueDecomposition
from src.groups import GroupParams
from src.spectra import EnergyTriple, SpectrumMultiset

Spectra = tuple[SpectrumMultiset, SpectrumMultiset, SpectrumMultiset]


@dataclass(frozen=True)
class OracleResult:
    """Everything the brute-force pipeline measured for one group.

    ``eigen_spectra`` and ``super_integral`` are None when the graph was
    larger than the matrix cap and the characteristic polynomials were not
    computed.
    """

    relations_ok: bool
    center_size: int
    class_sizes: tuple[int, ...]
    noncentral_classes: int
    decomposition: CliqueDecomposition
    spectra: Spectra
    triple: EnergyTriple
    ordering: OrderingCase
    classification: HyperClassification
    eigen_spectra: Spectra | None = None
    super_integral: bool | None = None


@dataclass(frozen=True)
class Agreement:
    """Formula-versus-oracle comparison flags for one triple.

    ``classification`` is None when the closed-form classification does not
    cover the triple; ``eigen`` is None when the eigenvalue oracle was
    skipped.
    """

    decomposition: bool
    spectra: bool
    energies: bool
    ordering: bool
    classification: bool | None
    eigen: bool | None
    super_integral: bool | None
    gutman: bool
    no_border: bool
    vertex_count: bool

    def failures(self) -> list[str]:
        """Names of the checks that did not hold."""
        return [
            name
            for name in (
                "decomposition",
                "spectra",
                "energies",
                "ordering",
                "classification",
                "eigen",
                "super_integral",
                "gutman",
                "no_border",
                "vertex_count",
            )
            if getattr(self, name) is False
        ]

    @property
    def all_agree(self) -> bool:
        return not self.failures()


@dataclass(frozen=True)
class SweepRow:
    """Formula results for one (p, m, n), with oracle results when it ran."""

    params: GroupParams
    decomposition: CliqueDecomposition
    spectra: Spectra
    triple: EnergyTriple
    ordering: EnergyOrdering
    classification: HyperClassification | ExplicitlyUncovered
    consistency: FormulaConsistency
    oracle: OracleResult | None = None
    agreement: Agreement | None = None
    warnings: tuple[str, ...] = ()

    @property
    def oracle_agrees(self) -> bool | None:
        return None if self.agreement is None else self.agreement.all_agree

    @property
    def super_integral(self) -> bool | None:
        return None if self.oracle is None else self.oracle.super_integral

    @property
    def passes(self) -> bool:
        """m < n rows and rows without an oracle never fail a sweep."""
        if not self.params.in_stated_range or self.agreement is None:
            return True
        return self.agreement.all_agree


@dataclass(frozen=True)
class SweepReport:
    """Rows sorted by (p, m, n)."""

    rows: tuple[SweepRow, ...] = field(default_factory=tuple)

    @classmethod
    def from_rows(cls, rows: list[SweepRow]) -> "SweepReport":
        return cls(tuple(sorted(rows, key=lambda row: row.params.key)))

    @property
    def passed(self) -> bool:
        return all(row.passes for row in self.rows)

    @property
    def exit_code(self) -> int:
        """0 when every checked row agrees, 1 otherwise."""
        return 0 if self.passed else 1

    def failing_rows(self) -> list[SweepRow]:
        return [row for row in self.rows if not row.passes]

    def annotated_rows(self) -> list[SweepRow]:
        return [row for row in self.rows if row.warnings]
