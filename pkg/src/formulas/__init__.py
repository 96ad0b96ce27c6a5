"""Closed-form spectra, energies, orderings and classifications.

Example usage:
    from src.formulas import thm1_energies, thm2_ordering
    from src.groups import make_params

    params = make_params(2, 2, 2)
    thm1_energies(params).le_plus  # Fraction(44, 3)
"""

from .classification import (
    ExplicitlyUncovered,
    FormulaConsistency,
    HyperClassification,
    classify_from_definitions,
    formula_consistency,
    thm3_classification,
)
from .exceptions import FormulaError
from .theorems import (
    EnergyOrdering,
    OrderingCase,
    le_uses_first_branch,
    ordering_from_triple,
    thm1_edge_count,
    thm1_energies,
    thm1_energy,
    thm1_laplacian_energy,
    thm1_mean_degree,
    thm1_signless_energy,
    thm1_spectra,
    thm1_vertex_count,
    thm2_ordering,
)

__all__ = [
    "EnergyOrdering",
    "ExplicitlyUncovered",
    "FormulaConsistency",
    "FormulaError",
    "HyperClassification",
    "OrderingCase",
    "classify_from_definitions",
    "formula_consistency",
    "le_uses_first_branch",
    "ordering_from_triple",
    "thm1_edge_count",
    "thm1_energies",
    "thm1_energy",
    "thm1_laplacian_energy",
    "thm1_mean_degree",
    "thm1_signless_energy",
    "thm1_spectra",
    "thm1_vertex_count",
    "thm2_ordering",
    "thm3_classification",
]
