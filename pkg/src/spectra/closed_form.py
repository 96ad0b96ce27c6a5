"""Spectra of disjoint unions of complete graphs.

K_k has adjacency eigenvalues k - 1 (once) and -1 (k - 1 times), Laplacian
eigenvalues 0 (once) and k (k - 1 times), and signless Laplacian eigenvalues
2k - 2 (once) and k - 2 (k - 1 times). A disjoint union takes the multiset
union, so each part (count, size) contributes ``count`` times those values.
"""

from src.graphs import CliqueDecomposition

from .models import MatrixKind, SpectrumMultiset


def adjacency_spectrum(decomp: CliqueDecomposition) -> SpectrumMultiset:
    items: list[tuple[int, int]] = []
    for count, size in decomp.parts:
        items.append((size - 1, count))
        items.append((-1, count * (size - 1)))
    return SpectrumMultiset.from_counts(MatrixKind.ADJACENCY, items)


def laplacian_spectrum(decomp: CliqueDecomposition) -> SpectrumMultiset:
    items: list[tuple[int, int]] = []
    for count, size in decomp.parts:
        items.append((0, count))
        items.append((size, count * (size - 1)))
    return SpectrumMultiset.from_counts(MatrixKind.LAPLACIAN, items)


def signless_spectrum(decomp: CliqueDecomposition) -> SpectrumMultiset:
    items: list[tuple[int, int]] = []
    for count, size in decomp.parts:
        items.append((2 * size - 2, count))
        items.append((size - 2, count * (size - 1)))
    return SpectrumMultiset.from_counts(MatrixKind.SIGNLESS, items)


def structural_spectra(
    decomp: CliqueDecomposition,
) -> tuple[SpectrumMultiset, SpectrumMultiset, SpectrumMultiset]:
    """Adjacency, Laplacian and signless spectra of a clique union."""
    return (
        adjacency_spectrum(decomp),
        laplacian_spectrum(decomp),
        signless_spectrum(decomp),
    )
