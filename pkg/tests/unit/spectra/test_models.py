"""Unit tests for exact spectral value types."""

from fractions import Fraction

import numpy as np
import pytest

from src.spectra import (
    EnergyTriple,
    IntegerMatrix,
    MatrixKind,
    SpectralError,
    SpectrumMultiset,
)


class TestSpectrumMultiset:
    """Tests for SpectrumMultiset."""

    def test_merge_sort_and_drop_zero(self):
        """
        Why: Spectra from different routes must compare equal as multisets
        What: Tests equal eigenvalues merge, zero multiplicities vanish and
             pairs sort by descending eigenvalue
        How: Builds a spectrum from unsorted duplicate items
        """
        spec = SpectrumMultiset.from_counts(
            MatrixKind.ADJACENCY, [(-1, 2), (2, 1), (-1, 1), (7, 0)]
        )

        assert spec.pairs == ((Fraction(2), 1), (Fraction(-1), 3))
        assert spec.dimension == 4
        assert str(spec) == "{2^1, -1^3}"

    def test_negative_multiplicity_raises(self):
        """
        Why: A negative multiplicity means a formula was mis-transcribed
        What: Tests SpectralError with the offending values in details
        How: Passes a -1 multiplicity
        """
        with pytest.raises(SpectralError) as exc_info:
            SpectrumMultiset.from_counts(MatrixKind.LAPLACIAN, [(3, -1)])

        assert exc_info.value.details["multiplicity"] == -1

    def test_traces(self):
        """
        Why: Traces give cheap consistency checks against |e|
        What: Tests trace and trace of squares of the K3 spectrum
        How: trace = 0 and trace of squares = 2|e| = 6
        """
        spec = SpectrumMultiset.from_counts(MatrixKind.ADJACENCY, [(2, 1), (-1, 2)])

        assert spec.trace == 0
        assert spec.trace_of_squares == 6

    def test_integrality_and_lookup(self):
        """
        Why: Super-integrality is reported from these flags
        What: Tests is_integral and multiplicity()
        How: Mixes an integer and a half-integer eigenvalue
        """
        spec = SpectrumMultiset.from_counts(
            MatrixKind.SIGNLESS, [(Fraction(1, 2), 2), (3, 1)]
        )

        assert not spec.is_integral
        assert spec.multiplicity(Fraction(1, 2)) == 2
        assert spec.multiplicity(3) == 1
        assert spec.multiplicity(5) == 0

    def test_kind_is_part_of_equality(self):
        """
        Why: An adjacency and a Laplacian spectrum are never interchangeable
        What: Tests equal pairs with different kinds compare unequal
        How: Builds the same pairs under two kinds
        """
        items = [(0, 3)]

        assert SpectrumMultiset.from_counts(
            MatrixKind.ADJACENCY, items
        ) != SpectrumMultiset.from_counts(MatrixKind.LAPLACIAN, items)


class TestEnergyTriple:
    """Tests for EnergyTriple."""

    def test_coercion_and_mean_degree(self):
        """
        Why: Energies are compared exactly, never as floats
        What: Tests ints become Fractions and the mean degree is 2|e|/|V|
        How: Builds the triple of 2xK4+2xK2
        """
        triple = EnergyTriple(16, 20, Fraction(44, 3), num_vertices=12, num_edges=14)

        assert isinstance(triple.e, Fraction)
        assert triple.mean_degree == Fraction(7, 3)
        assert triple.baseline == 22

    def test_negative_energy_raises(self):
        """
        Why: Energies are sums of absolute values
        What: Tests a negative LE raises SpectralError
        How: Builds a triple with LE = -1
        """
        with pytest.raises(SpectralError):
            EnergyTriple(0, -1, 0, num_vertices=1, num_edges=0)

    def test_empty_graph_mean_degree(self):
        """
        Why: The value type itself must not divide by zero
        What: Tests mean degree 0 for zero vertices
        How: Builds an all-zero triple
        """
        assert EnergyTriple(0, 0, 0, num_vertices=0, num_edges=0).mean_degree == 0


class TestIntegerMatrix:
    """Tests for IntegerMatrix."""

    def test_row_data(self):
        """
        Why: Row sums bound the eigenvalues used for root extraction
        What: Tests dimension, trace, row sums and the absolute row bound
        How: Uses the Laplacian of P3
        """
        matrix = IntegerMatrix.from_rows([[1, -1, 0], [-1, 2, -1], [0, -1, 1]])

        assert matrix.dimension == 3
        assert matrix.trace == 4
        assert matrix.row_sums() == (0, 0, 0)
        assert matrix.max_abs_row_sum() == 4
        assert np.array_equal(matrix.to_numpy(), np.array(matrix.entries))

    def test_from_numpy(self):
        """
        Why: Graph matrices arrive as numpy arrays
        What: Tests numpy integers are converted to Python ints
        How: Builds from an int64 array and checks entry types
        """
        matrix = IntegerMatrix.from_rows(np.eye(2, dtype=np.int64))

        assert matrix.entries == ((1, 0), (0, 1))
        assert type(matrix.entries[0][0]) is int

    def test_non_square_raises(self):
        """
        Why: Characteristic polynomials need square matrices
        What: Tests a ragged row raises SpectralError
        How: Passes a 2x3 matrix
        """
        with pytest.raises(SpectralError, match="row 0"):
            IntegerMatrix.from_rows([[1, 2, 3], [4, 5, 6]])

    def test_asymmetric_raises(self):
        """
        Why: Root bounds assume real spectra of symmetric matrices
        What: Tests an asymmetric matrix raises SpectralError
        How: Passes [[0, 1], [0, 0]]
        """
        with pytest.raises(SpectralError, match="symmetric"):
            IntegerMatrix.from_rows([[0, 1], [0, 0]])

    def test_empty_matrix(self):
        """
        Why: A graph with no vertices has 0x0 matrices
        What: Tests dimension 0 and row bound 0
        How: Builds from an empty row list
        """
        matrix = IntegerMatrix.from_rows([])

        assert matrix.dimension == 0
        assert matrix.max_abs_row_sum() == 0
        assert matrix.to_numpy().shape == (0, 0)
