"""Exact spectra and energies.

Two independent routes lead to a spectrum: the structural closed form for a
clique union and the characteristic polynomial of an explicit matrix
followed by integer root extraction.

Example usage:
    from src.spectra import adjacency_spectrum, char_poly, energy

    e = energy(adjacency_spectrum(decomposition))
"""

from .charpoly import char_poly, integer_spectrum
from .closed_form import (
    adjacency_spectrum,
    laplacian_spectrum,
    signless_spectrum,
    structural_spectra,
)
from .energy import (
    complete_graph_energy,
    decomposition_energies,
    energies_from_spectra,
    energy,
    laplacian_energy,
    signless_energy,
)
from .exceptions import (
    DimensionCapExceededError,
    EmptyGraphError,
    NotMonicError,
    SpectralError,
    WrongKindError,
)
from .matrices import matrices_from_graph
from .models import (
    EnergyTriple,
    IntegerMatrix,
    MatrixKind,
    NonIntegralReport,
    SpectrumMultiset,
)

__all__ = [
    "DimensionCapExceededError",
    "EmptyGraphError",
    "EnergyTriple",
    "IntegerMatrix",
    "MatrixKind",
    "NonIntegralReport",
    "NotMonicError",
    "SpectralError",
    "SpectrumMultiset",
    "WrongKindError",
    "adjacency_spectrum",
    "char_poly",
    "complete_graph_energy",
    "decomposition_energies",
    "energies_from_spectra",
    "energy",
    "integer_spectrum",
    "laplacian_energy",
    "laplacian_spectrum",
    "matrices_from_graph",
    "signless_energy",
    "signless_spectrum",
    "structural_spectra",
]
