"""Graph energies from exact spectra.

E sums |lambda| over adjacency eigenvalues. LE and LE+ sum
|mu - 2|e|/|V|| over Laplacian and signless Laplacian eigenvalues.
"""

from fractions import Fraction

from src.graphs import CliqueDecomposition

from .closed_form import structural_spectra
from .exceptions import EmptyGraphError, WrongKindError
from .models import EnergyTriple, MatrixKind, SpectrumMultiset


def _require_kind(spec: SpectrumMultiset, kind: MatrixKind) -> None:
    if spec.kind is not kind:
        raise WrongKindError(kind.value, spec.kind.value)


def energy(spec: SpectrumMultiset) -> Fraction:
    """Adjacency energy.

    Raises:
        WrongKindError: If ``spec`` is not an adjacency spectrum
    """
    _require_kind(spec, MatrixKind.ADJACENCY)
    return sum((abs(value) * mult for value, mult in spec.pairs), Fraction(0))


def _shifted_energy(spec: SpectrumMultiset, v: int, e: int) -> Fraction:
    if v == 0:
        raise EmptyGraphError()
    mean = Fraction(2 * e, v)
    return sum((abs(value - mean) * mult for value, mult in spec.pairs), Fraction(0))


def laplacian_energy(spec: SpectrumMultiset, v: int, e: int) -> Fraction:
    """Laplacian energy of a graph with v vertices and e edges.

    Raises:
        WrongKindError: If ``spec`` is not a Laplacian spectrum
        EmptyGraphError: If v is 0
    """
    _require_kind(spec, MatrixKind.LAPLACIAN)
    return _shifted_energy(spec, v, e)


def signless_energy(spec: SpectrumMultiset, v: int, e: int) -> Fraction:
    """Signless Laplacian energy of a graph with v vertices and e edges.

    Raises:
        WrongKindError: If ``spec`` is not a signless Laplacian spectrum
        EmptyGraphError: If v is 0
    """
    _require_kind(spec, MatrixKind.SIGNLESS)
    return _shifted_energy(spec, v, e)


def complete_graph_energy(v: int) -> Fraction:
    """E, LE and LE+ of K_v all equal 2(v - 1)."""
    return Fraction(2 * (v - 1))


def energies_from_spectra(
    adjacency: SpectrumMultiset,
    laplacian: SpectrumMultiset,
    signless: SpectrumMultiset,
    v: int,
    e: int,
) -> EnergyTriple:
    return EnergyTriple(
        e=energy(adjacency),
        le=laplacian_energy(laplacian, v, e),
        le_plus=signless_energy(signless, v, e),
        num_vertices=v,
        num_edges=e,
    )


def decomposition_energies(decomp: CliqueDecomposition) -> EnergyTriple:
    """Energy triple of a clique union from its structural spectra."""
    adjacency, laplacian, signless = structural_spectra(decomp)
    return energies_from_spectra(
        adjacency,
        laplacian,
        signless,
        decomp.total_vertices,
        decomp.total_edges,
    )
