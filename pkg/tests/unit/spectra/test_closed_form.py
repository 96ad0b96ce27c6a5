"""Unit tests for spectra of clique unions."""

import pytest

from src.graphs import CliqueDecomposition
from src.spectra import (
    MatrixKind,
    SpectrumMultiset,
    adjacency_spectrum,
    laplacian_spectrum,
    signless_spectrum,
    structural_spectra,
)


def _spec(kind: MatrixKind, *items: tuple[int, int]) -> SpectrumMultiset:
    return SpectrumMultiset.from_counts(kind, items)


class TestStructuralSpectra:
    """Tests for the per-part spectra of K_k unions."""

    def test_mixed_union(self):
        """
        Why: 2xK4+2xK2 is the closed-form prediction for G(2,2,2)
        What: Tests all three spectra against hand values
        How: Builds the decomposition and compares multisets
        """
        decomp = CliqueDecomposition.from_parts([(2, 4), (2, 2)])

        adjacency, laplacian, signless = structural_spectra(decomp)

        assert adjacency == _spec(MatrixKind.ADJACENCY, (3, 2), (1, 2), (-1, 8))
        assert laplacian == _spec(MatrixKind.LAPLACIAN, (4, 6), (2, 2), (0, 4))
        assert signless == _spec(MatrixKind.SIGNLESS, (6, 2), (2, 8), (0, 2))

    def test_isolated_vertices(self):
        """
        Why: K1 parts contribute only zero eigenvalues
        What: Tests 3xK1 gives {0^3} for every matrix
        How: Evaluates each spectrum of 3xK1
        """
        decomp = CliqueDecomposition.from_parts([(3, 1)])

        for spec in structural_spectra(decomp):
            assert spec.pairs == ((0, 3),)

    @pytest.mark.parametrize(
        "parts", [[(3, 2)], [(6, 6), (2, 18)], [(1, 5)], [(2, 16), (2, 8)]]
    )
    def test_trace_identities(self, parts):
        """
        Why: tr A = 0, tr A^2 = tr L = tr Q = 2|e| hold for every graph
        What: Tests the identities and that each spectrum has dimension |V|
        How: Evaluates several unions
        """
        decomp = CliqueDecomposition.from_parts(parts)
        twice_edges = 2 * decomp.total_edges

        adjacency = adjacency_spectrum(decomp)
        laplacian = laplacian_spectrum(decomp)
        signless = signless_spectrum(decomp)

        assert adjacency.trace == 0
        assert adjacency.trace_of_squares == twice_edges
        assert laplacian.trace == signless.trace == twice_edges
        for spec in (adjacency, laplacian, signless):
            assert spec.dimension == decomp.total_vertices
