"""Hyperenergetic and borderenergetic classification.

A graph on |V| vertices is hyperenergetic when its energy exceeds 2(|V| - 1),
the common value of E, LE and LE+ for the complete graph K_|V|, and
borderenergetic when it equals that value without being K_|V| itself. The
L- and Q- variants use LE and LE+ in place of E.
"""

from dataclasses import dataclass
from fractions import Fraction

from src.graphs import predicted_decomposition
from src.groups import GroupParams
from src.spectra import EnergyTriple, energies_from_spectra

from .exceptions import FormulaError
from .theorems import (
    OrderingCase,
    ordering_from_triple,
    thm1_edge_count,
    thm1_energies,
    thm1_spectra,
    thm1_vertex_count,
    thm2_ordering,
)


@dataclass(frozen=True)
class HyperClassification:
    hyperenergetic: bool
    borderenergetic: bool
    l_hyperenergetic: bool
    l_borderenergetic: bool
    q_hyperenergetic: bool
    q_borderenergetic: bool
    baseline: Fraction

    def __post_init__(self) -> None:
        for prefix in ("", "l_", "q_"):
            if getattr(self, f"{prefix}hyperenergetic") and getattr(
                self, f"{prefix}borderenergetic"
            ):
                raise FormulaError(
                    f"{prefix}hyperenergetic and {prefix}borderenergetic "
                    "cannot both hold",
                    {"prefix": prefix},
                )

    @property
    def any_border(self) -> bool:
        return self.borderenergetic or self.l_borderenergetic or self.q_borderenergetic

    def flags(self) -> tuple[bool, bool, bool, bool, bool, bool]:
        """(hyper, border, l_hyper, l_border, q_hyper, q_border)."""
        return (
            self.hyperenergetic,
            self.borderenergetic,
            self.l_hyperenergetic,
            self.l_borderenergetic,
            self.q_hyperenergetic,
            self.q_borderenergetic,
        )


@dataclass(frozen=True)
class ExplicitlyUncovered:
    """Marker for parameters that no case of the classification lists."""

    params: GroupParams
    reason: str


def thm3_classification(
    params: GroupParams,
) -> HyperClassification | ExplicitlyUncovered:
    """Classification selected from (p, m, n) alone.

    Case 1 (nothing holds): n = 1, or n = 2, p = 2, m in {1, 2}.
    Case 2 (L-hyperenergetic only): n = 2, p = 2, m = 3, or n = 3, p = 2, m = 1.
    Case 3 (L- and Q-hyperenergetic): n = 2, p = 2, m >= 4; n = 2, p >= 3;
    n = 3, p = 2, m >= 2; n >= 4.

    n = 3 with p >= 3 matches none of these and yields
    :class:`ExplicitlyUncovered`.
    """
    p, m, n = params.p, params.m, params.n
    baseline = Fraction(2 * (thm1_vertex_count(params) - 1))

    if n == 1 or (n == 2 and p == 2 and m in (1, 2)):
        l_hyper, q_hyper = False, False
    elif (n == 2 and p == 2 and m == 3) or (n == 3 and p == 2 and m == 1):
        l_hyper, q_hyper = True, False
    elif (
        (n == 2 and p == 2 and m >= 4)
        or (n == 2 and p >= 3)
        or (n == 3 and p == 2 and m >= 2)
        or n >= 4
    ):
        l_hyper, q_hyper = True, True
    else:
        return ExplicitlyUncovered(
            params, f"no classification case lists n={n} with p={p}"
        )

    return HyperClassification(
        hyperenergetic=False,
        borderenergetic=False,
        l_hyperenergetic=l_hyper,
        l_borderenergetic=False,
        q_hyperenergetic=q_hyper,
        q_borderenergetic=False,
        baseline=baseline,
    )


def classify_from_definitions(
    triple: EnergyTriple, is_complete_graph: bool = False
) -> HyperClassification:
    """Classify by exact comparison against 2(|V| - 1).

    Border flags require the graph not to be K_|V|; the caller knows the
    graph and says so through ``is_complete_graph``.
    """
    baseline = triple.baseline

    def above(value: Fraction) -> bool:
        return value > baseline

    def level(value: Fraction) -> bool:
        return value == baseline and not is_complete_graph

    return HyperClassification(
        hyperenergetic=above(triple.e),
        borderenergetic=level(triple.e),
        l_hyperenergetic=above(triple.le),
        l_borderenergetic=level(triple.le),
        q_hyperenergetic=above(triple.le_plus),
        q_borderenergetic=level(triple.le_plus),
        baseline=baseline,
    )


@dataclass(frozen=True)
class FormulaConsistency:
    """The closed forms checked against one another for one parameter triple.

    Attributes:
        counts_match_decomposition: |V| and |e| agree with the closed-form
            decomposition
        energies_match_spectra: Energies recomputed from the closed-form
            spectra agree with the piecewise energy formulas
        ordering_matches: The (p, m, n)-selected ordering case agrees with
            exact comparison of the closed-form energies
        classification_matches: The (p, m, n)-selected classification agrees
            with classification from the closed-form energies; None when the
            parameters are uncovered
    """

    counts_match_decomposition: bool
    energies_match_spectra: bool
    ordering_matches: bool
    classification_matches: bool | None

    @property
    def ok(self) -> bool:
        return (
            self.counts_match_decomposition
            and self.energies_match_spectra
            and self.ordering_matches
            and self.classification_matches is not False
        )


def formula_consistency(params: GroupParams) -> FormulaConsistency:
    triple = thm1_energies(params)
    decomposition = predicted_decomposition(params)
    adjacency, laplacian, signless = thm1_spectra(params)
    from_spectra = energies_from_spectra(
        adjacency, laplacian, signless, triple.num_vertices, triple.num_edges
    )
    classification = thm3_classification(params)
    ordering = thm2_ordering(params)
    return FormulaConsistency(
        counts_match_decomposition=(
            decomposition.total_vertices == thm1_vertex_count(params)
            and decomposition.total_edges == thm1_edge_count(params)
        ),
        energies_match_spectra=(
            (from_spectra.e, from_spectra.le, from_spectra.le_plus)
            == (triple.e, triple.le, triple.le_plus)
        ),
        ordering_matches=ordering.case_id is ordering_from_triple(triple)
        and ordering.case_id is not OrderingCase.UNCLASSIFIED,
        classification_matches=None
        if isinstance(classification, ExplicitlyUncovered)
        else classification == classify_from_definitions(triple),
    )
