"""Exact characteristic polynomials and integer root extraction.

``char_poly`` is an eigenvalue oracle independent of the clique structure.
The matrix is first split into the diagonal blocks of the connected
components of its off-diagonal support; the polynomial is the product of the
block polynomials. Each block is reduced to upper Hessenberg form modulo
several word-size primes, its characteristic polynomial is read off the
Hessenberg recurrence, and the coefficients are lifted by the Chinese
remainder theorem into the symmetric range.

Every eigenvalue of a symmetric matrix has modulus at most R, the largest
absolute row sum, so the coefficient of lambda^(n-j) is bounded by
C(n, j) R^j. Primes are added until their product exceeds twice that bound,
which makes the lift exact.
"""

import logging
import math
import threading
from functools import lru_cache

import networkx as nx
import numpy as np

from src.config.settings import DEFAULT_MATRIX_CAP
from src.groups.params import is_prime

from .exceptions import DimensionCapExceededError, NotMonicError
from .models import IntegerMatrix, MatrixKind, NonIntegralReport, SpectrumMultiset

logger = logging.getLogger(__name__)

# q < 2^26 keeps every product of two residues below 2^52, inside int64.
_MODULUS_CEILING = 2**26

_moduli: list[int] = []
_moduli_lock = threading.Lock()


def _modulus(position: int) -> int:
    """The position-th prime below 2^26, counting downwards."""
    with _moduli_lock:
        while len(_moduli) <= position:
            candidate = (_moduli[-1] if _moduli else _MODULUS_CEILING) - 1
            while not is_prime(candidate):
                candidate -= 1
            _moduli.append(candidate)
        return _moduli[position]


def _coefficient_bound(dimension: int, radius: int) -> int:
    return max(math.comb(dimension, j) * radius**j for j in range(dimension + 1))


def _hessenberg_mod(block: np.ndarray, q: int) -> np.ndarray:
    """Upper Hessenberg form similar to ``block`` over GF(q)."""
    h = np.mod(block, q)
    n = h.shape[0]
    for j in range(n - 2):
        nonzero = np.flatnonzero(h[j + 1 :, j])
        if nonzero.size == 0:
            continue
        pivot = j + 1 + int(nonzero[0])
        if pivot != j + 1:
            h[[pivot, j + 1], :] = h[[j + 1, pivot], :]
            h[:, [pivot, j + 1]] = h[:, [j + 1, pivot]]
        inverse = pow(int(h[j + 1, j]), q - 2, q)
        factors = np.mod(h[j + 2 :, j] * inverse, q)
        if not factors.any():
            continue
        h[j + 2 :, :] = np.mod(h[j + 2 :, :] - np.outer(factors, h[j + 1, :]), q)
        h[:, j + 1] = np.mod(
            h[:, j + 1] + np.mod(h[:, j + 2 :] * factors, q).sum(axis=1), q
        )
    return h


def _char_poly_mod(block: np.ndarray, q: int) -> np.ndarray:
    """det(lambda I - block) over GF(q), lowest degree first."""
    h = _hessenberg_mod(block, q)
    n = h.shape[0]
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        current = np.zeros(n + 1, dtype=np.int64)
        current[1:] = polys[k - 1, :-1]
        current = np.mod(current - int(h[k - 1, k - 1]) * polys[k - 1], q)
        if k > 1:
            weights = np.zeros(k - 1, dtype=np.int64)
            chain = 1
            for i in range(1, k):
                chain = chain * int(h[k - i, k - i - 1]) % q
                weights[i - 1] = chain * int(h[k - i - 1, k - 1]) % q
            rows = polys[k - 2 :: -1][: k - 1]
            correction = np.mod(weights[:, None] * rows, q).sum(axis=0)
            current = np.mod(current - correction, q)
        polys[k] = current
    return polys[n]


@lru_cache(maxsize=256)
def _block_char_poly(entries: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    n = len(entries)
    block = np.array(entries, dtype=np.int64).reshape(n, n)
    radius = max((sum(abs(v) for v in row) for row in entries), default=0)
    bound = _coefficient_bound(n, radius)

    lifted = [0] * (n + 1)
    modulus = 1
    position = 0
    while modulus <= 2 * bound:
        q = _modulus(position)
        residues = _char_poly_mod(block, q)
        correction = pow(modulus, -1, q)
        for i in range(n + 1):
            step = (int(residues[i]) - lifted[i]) * correction % q
            lifted[i] += modulus * step
        modulus *= q
        position += 1

    half = modulus // 2
    signed = [c - modulus if c > half else c for c in lifted]
    logger.debug(
        "Computed block characteristic polynomial",
        extra={"dimension": n, "moduli": position},
    )
    return tuple(reversed(signed))


def _poly_multiply(left: list[int], right: tuple[int, ...]) -> list[int]:
    product = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if a:
            for j, b in enumerate(right):
                product[i + j] += a * b
    return product


def char_poly(
    matrix: IntegerMatrix, matrix_cap: int = DEFAULT_MATRIX_CAP
) -> tuple[int, ...]:
    """Characteristic polynomial det(lambda I - M), highest degree first.

    Args:
        matrix: Symmetric integer matrix
        matrix_cap: Largest accepted dimension

    Returns:
        Monic integer coefficients, length dimension + 1

    Raises:
        DimensionCapExceededError: If the dimension exceeds ``matrix_cap``
    """
    n = matrix.dimension
    if n > matrix_cap:
        raise DimensionCapExceededError(n, matrix_cap)

    support = nx.Graph()
    support.add_nodes_from(range(n))
    support.add_edges_from(
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if matrix.entries[i][j]
    )

    result = [1]
    for component in sorted(nx.connected_components(support), key=min):
        vertices = sorted(component)
        block = tuple(
            tuple(matrix.entries[i][j] for j in vertices) for i in vertices
        )
        result = _poly_multiply(result, _block_char_poly(block))
    return tuple(result)


def _synthetic_divide(poly: list[int], root: int) -> tuple[list[int], int]:
    """Divide by (lambda - root); returns quotient and remainder."""
    quotient = [poly[0]]
    for coefficient in poly[1:-1]:
        quotient.append(coefficient + root * quotient[-1])
    remainder = poly[-1] + root * quotient[-1]
    return quotient, remainder


def integer_spectrum(
    poly: tuple[int, ...] | list[int],
    bound: int | None = None,
    kind: MatrixKind = MatrixKind.ADJACENCY,
) -> SpectrumMultiset | NonIntegralReport:
    """Extract every integer root of a monic integer polynomial.

    Candidates are 0 and +-1 .. +-bound. Pass the matrix's largest absolute
    row sum as ``bound``; without it the Cauchy bound 1 + max |c_i| is used.
    A candidate is only tried when it divides the current constant term.

    Args:
        poly: Coefficients, highest degree first
        bound: Largest candidate modulus
        kind: Matrix kind recorded on the result

    Returns:
        The spectrum when every root is an integer, otherwise a
        :class:`NonIntegralReport` carrying the residual factor

    Raises:
        NotMonicError: If the leading coefficient is not 1
    """
    if not poly or poly[0] != 1:
        raise NotMonicError(poly[0] if poly else None)

    remaining = [int(c) for c in poly]
    roots: list[tuple[int, int]] = []

    zeros = 0
    while len(remaining) > 1 and remaining[-1] == 0:
        remaining.pop()
        zeros += 1
    if zeros:
        roots.append((0, zeros))

    if bound is None:
        bound = 1 + max((abs(c) for c in remaining[1:]), default=0)

    for magnitude in range(1, bound + 1):
        if len(remaining) == 1:
            break
        if remaining[-1] % magnitude:
            continue
        for root in (magnitude, -magnitude):
            multiplicity = 0
            while len(remaining) > 1:
                quotient, remainder = _synthetic_divide(remaining, root)
                if remainder:
                    break
                remaining = quotient
                multiplicity += 1
            if multiplicity:
                roots.append((root, multiplicity))

    extracted = SpectrumMultiset.from_counts(kind, roots)
    if len(remaining) > 1:
        return NonIntegralReport(kind, extracted, tuple(remaining))
    return extracted
