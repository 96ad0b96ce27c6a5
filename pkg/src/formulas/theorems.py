"""Closed forms for the CCC graph of G(p, m, n).

Each formula is transcribed term by term, including the piecewise branch
conditions, and evaluated with ``Fraction`` so that negative powers of p
(which appear for small m or n) stay exact. Nothing here is simplified
algebraically; a transcription slip shows up as a mismatch against the
brute-force pipeline instead of disappearing into a rewrite.

All functions accept any valid parameters, including m < n, where the
closed forms are evaluated as written.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from src.groups import GroupParams
from src.spectra import EnergyTriple, MatrixKind, SpectrumMultiset

from .exceptions import FormulaError


def _pow(p: int, exponent: int) -> Fraction:
    return Fraction(p) ** exponent


def _as_int(value: Fraction, label: str, params: GroupParams) -> int:
    if value.denominator != 1:
        raise FormulaError(
            f"{label} is not an integer for {params.label}: {value}",
            {"params": params.key, label: str(value)},
        )
    return int(value)


def thm1_vertex_count(params: GroupParams) -> int:
    """|V| = p^(m+n-2) (p^2 - 1)."""
    p, m, n = params.p, params.m, params.n
    return _as_int(_pow(p, m + n - 2) * (p**2 - 1), "num_vertices", params)


def thm1_edge_count(params: GroupParams) -> int:
    """|e| = p^(m+n-4) (p-1)/2 (2p^(m+n+1) - 2p^(m+n) + p^(m+3) - 2p^(m+2)
    + p^(m+1) - p^3 - p^2)."""
    p, m, n = params.p, params.m, params.n
    bracket = (
        2 * p ** (m + n + 1)
        - 2 * p ** (m + n)
        + p ** (m + 3)
        - 2 * p ** (m + 2)
        + p ** (m + 1)
        - p**3
        - p**2
    )
    value = _pow(p, m + n - 4) * Fraction(p - 1, 2) * bracket
    return _as_int(value, "num_edges", params)


def thm1_mean_degree(params: GroupParams) -> Fraction:
    return Fraction(2 * thm1_edge_count(params), thm1_vertex_count(params))


def thm1_spectra(
    params: GroupParams,
) -> tuple[SpectrumMultiset, SpectrumMultiset, SpectrumMultiset]:
    """Adjacency, Laplacian and signless Laplacian spectra in closed form."""
    p, m, n = params.p, params.m, params.n

    def mult(value: Fraction, label: str) -> int:
        return _as_int(value, label, params)

    lower = mult(_pow(p, n - 2) * (p - 1) * (p ** (m + 1) - p**m - p), "mult")
    adjacency = SpectrumMultiset.from_counts(
        MatrixKind.ADJACENCY,
        [
            (
                -1,
                mult(
                    _pow(p, m + n)
                    - _pow(p, m + n - 2)
                    - p**n
                    + p ** (n - 1)
                    - 2,
                    "mult",
                ),
            ),
            (p**m - p ** (m - 1) - 1, p ** (n - 1) * (p - 1)),
            (p ** (m + n - 1) - _pow(p, m + n - 2) - 1, 2),
        ],
    )
    laplacian = SpectrumMultiset.from_counts(
        MatrixKind.LAPLACIAN,
        [
            (0, p**n - p ** (n - 1) + 2),
            (p ** (m - 1) * (p - 1), lower),
            (
                _pow(p, m + n - 2) * (p - 1),
                mult(2 * ((p - 1) * _pow(p, m + n - 2) - 1), "mult"),
            ),
        ],
    )
    signless = SpectrumMultiset.from_counts(
        MatrixKind.SIGNLESS,
        [
            (2 * p**m - 2 * p ** (m - 1) - 2, p ** (n - 1) * (p - 1)),
            (p**m - p ** (m - 1) - 2, lower),
            (2 * p ** (m + n - 1) - 2 * _pow(p, m + n - 2) - 2, 2),
            (
                p ** (m + n - 1) - _pow(p, m + n - 2) - 2,
                mult(2 * (p ** (m + n - 1) - _pow(p, m + n - 2) - 1), "mult"),
            ),
        ],
    )
    return adjacency, laplacian, signless


def thm1_energy(params: GroupParams) -> Fraction:
    """E = 2(p^(m+n) - p^(m+n-2) - p^n + p^(n-1) - 2)."""
    p, m, n = params.p, params.m, params.n
    return 2 * (p ** (m + n) - _pow(p, m + n - 2) - p**n + p ** (n - 1) - 2)


def le_uses_first_branch(params: GroupParams) -> bool:
    """n = 1 (any p, m), or n = 2, p = 2, m = 1."""
    p, m, n = params.p, params.m, params.n
    return n == 1 or (n == 2 and p == 2 and m == 1)


def thm1_laplacian_energy(params: GroupParams) -> Fraction:
    p, m, n = params.p, params.m, params.n
    if le_uses_first_branch(params):
        numerator = (
            2
            * (p ** (n + 1) - p**n + 2 * p)
            * (
                2 * p ** (m + n + 1)
                - 2 * p ** (m + n)
                + p ** (m + 3)
                - 2 * p ** (m + 2)
                + p ** (m + 1)
                - p**3
                - p**2
            )
        )
        return Fraction(numerator, p**3 * (p + 1))
    bracket = (
        p ** (2 * m + 2 * n + 3)
        - 3 * p ** (2 * (m + n + 1))
        + 3 * p ** (2 * m + 2 * n + 1)
        - p ** (2 * (m + n))
        - p ** (2 * m + n + 4)
        + 3 * p ** (2 * m + n + 3)
        - 3 * p ** (2 * m + n + 2)
        + p ** (2 * m + n + 1)
        + 2 * p ** (m + n + 3)
        - 2 * p ** (m + n + 2)
        + p ** (m + 5)
        - 2 * p ** (m + 4)
        + p ** (m + 3)
        - p**5
        - p**4
    )
    return Fraction(4, p**4 * (p + 1)) * bracket


def thm1_signless_energy(params: GroupParams) -> Fraction:
    p, m, n = params.p, params.m, params.n
    if n == 1:
        return Fraction(2 * (p ** (m + 1) - p ** (m - 1) - p - 1))
    if n == 2 and p == 2:
        if m <= 2:
            return Fraction(2, 3) * (7 * 2**m - 6)
        return Fraction(2, 3) * (4**m + 2**m - 6)
    return Fraction(4, p + 1) * _pow(p, 2 * m + n - 4) * (p - 1) ** 3 * (p**n - p)


def thm1_energies(params: GroupParams) -> EnergyTriple:
    """E, LE and LE+ with |V| and |e| from the closed forms."""
    return EnergyTriple(
        e=thm1_energy(params),
        le=thm1_laplacian_energy(params),
        le_plus=thm1_signless_energy(params),
        num_vertices=thm1_vertex_count(params),
        num_edges=thm1_edge_count(params),
    )


class OrderingCase(str, Enum):
    """Relative order of E, LE+ and LE."""

    ALL_EQUAL = "ALL_EQUAL"
    E_LT_LEP_EQ_LE = "E_LT_LEP_EQ_LE"
    LEP_LT_E_LT_LE = "LEP_LT_E_LT_LE"
    E_LT_LEP_LT_LE = "E_LT_LEP_LT_LE"
    UNCLASSIFIED = "UNCLASSIFIED"


@dataclass(frozen=True)
class EnergyOrdering:
    case_id: OrderingCase
    witness: EnergyTriple

    @property
    def is_consistent(self) -> bool:
        """True when the witness values satisfy the stated case."""
        return ordering_from_triple(self.witness) is self.case_id


def ordering_from_triple(triple: EnergyTriple) -> OrderingCase:
    """Ordering case recomputed by exact comparison of the three energies."""
    e, le, lep = triple.e, triple.le, triple.le_plus
    if e == lep == le:
        return OrderingCase.ALL_EQUAL
    if e < lep == le:
        return OrderingCase.E_LT_LEP_EQ_LE
    if lep < e < le:
        return OrderingCase.LEP_LT_E_LT_LE
    if e < lep < le:
        return OrderingCase.E_LT_LEP_LT_LE
    return OrderingCase.UNCLASSIFIED


def thm2_ordering(params: GroupParams) -> EnergyOrdering:
    """Ordering case selected from (p, m, n) alone, witnessed by the closed forms."""
    p, m, n = params.p, params.m, params.n
    if n == 1:
        case = OrderingCase.ALL_EQUAL
    elif n == 2 and p == 2 and m == 1:
        case = OrderingCase.E_LT_LEP_EQ_LE
    elif n == 2 and p == 2 and m == 2:
        case = OrderingCase.LEP_LT_E_LT_LE
    else:
        case = OrderingCase.E_LT_LEP_LT_LE
    return EnergyOrdering(case, thm1_energies(params))
