"""Exact spectral data types.

Eigenvalues and energies are ``fractions.Fraction`` throughout; nothing in
the verification path is a float.
"""

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .exceptions import SpectralError

Rational = Fraction | int


class MatrixKind(str, Enum):
    """Matrix a spectrum belongs to."""

    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS = "signless"


@dataclass(frozen=True)
class SpectrumMultiset:
    """Merged (eigenvalue, multiplicity) pairs sorted by descending eigenvalue."""

    kind: MatrixKind
    pairs: tuple[tuple[Fraction, int], ...]

    @classmethod
    def from_counts(
        cls, kind: MatrixKind, items: Iterable[tuple[Rational, int]]
    ) -> "SpectrumMultiset":
        """Merge equal eigenvalues and drop zero multiplicities.

        Raises:
            SpectralError: If a multiplicity is negative
        """
        counts: Counter[Fraction] = Counter()
        for value, multiplicity in items:
            if multiplicity < 0:
                raise SpectralError(
                    f"negative multiplicity {multiplicity} for eigenvalue {value}",
                    {"eigenvalue": str(value), "multiplicity": multiplicity},
                )
            counts[Fraction(value)] += multiplicity
        pairs = tuple(
            (value, counts[value])
            for value in sorted(counts, reverse=True)
            if counts[value]
        )
        return cls(kind, pairs)

    @property
    def dimension(self) -> int:
        return sum(multiplicity for _, multiplicity in self.pairs)

    @property
    def trace(self) -> Fraction:
        return sum((value * mult for value, mult in self.pairs), Fraction(0))

    @property
    def trace_of_squares(self) -> Fraction:
        return sum((value * value * mult for value, mult in self.pairs), Fraction(0))

    @property
    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value, _ in self.pairs)

    def multiplicity(self, value: Rational) -> int:
        for eigenvalue, mult in self.pairs:
            if eigenvalue == value:
                return mult
        return 0

    def __str__(self) -> str:
        body = ", ".join(f"{value}^{mult}" for value, mult in self.pairs)
        return "{" + body + "}"


@dataclass(frozen=True)
class EnergyTriple:
    """E, LE and LE+ of one graph with its vertex and edge counts."""

    e: Fraction
    le: Fraction
    le_plus: Fraction
    num_vertices: int
    num_edges: int
    mean_degree: Fraction = field(init=False)

    def __post_init__(self) -> None:
        for name in ("e", "le", "le_plus"):
            value = Fraction(getattr(self, name))
            if value < 0:
                raise SpectralError(
                    f"energy {name} must be non-negative, got {value}",
                    {name: str(value)},
                )
            object.__setattr__(self, name, value)
        mean = (
            Fraction(2 * self.num_edges, self.num_vertices)
            if self.num_vertices
            else Fraction(0)
        )
        object.__setattr__(self, "mean_degree", mean)

    @property
    def baseline(self) -> Fraction:
        """Energy of the complete graph on the same vertex count, 2(|V| - 1)."""
        return Fraction(2 * (self.num_vertices - 1))


@dataclass(frozen=True)
class IntegerMatrix:
    """Square symmetric matrix of Python integers."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise SpectralError(
                    f"row {i} has length {len(row)}, expected {n}",
                    {"row": i, "length": len(row)},
                )
        for i in range(n):
            for j in range(i + 1, n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise SpectralError(
                        f"matrix is not symmetric at ({i}, {j})", {"i": i, "j": j}
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]] | np.ndarray) -> "IntegerMatrix":
        return cls(tuple(tuple(int(value) for value in row) for row in rows))

    @property
    def dimension(self) -> int:
        return len(self.entries)

    @property
    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.dimension))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def max_abs_row_sum(self) -> int:
        """Largest absolute row sum; bounds every eigenvalue's modulus."""
        return max((sum(abs(v) for v in row) for row in self.entries), default=0)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(
            self.dimension, self.dimension
        )


@dataclass(frozen=True)
class NonIntegralReport:
    """Result of root extraction when an integer-free factor remains.

    Attributes:
        kind: Matrix kind the polynomial came from
        integer_part: Integer roots that were extracted
        residual: Remaining monic factor, highest degree first
    """

    kind: MatrixKind
    integer_part: SpectrumMultiset
    residual: tuple[int, ...]

    @property
    def residual_degree(self) -> int:
        return len(self.residual) - 1
