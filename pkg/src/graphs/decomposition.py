"""Disjoint unions of complete graphs.

:func:`decompose` splits a graph into connected components and checks that
each one is complete. :func:`predicted_decomposition` evaluates the quoted
closed form

    (p^n - p^(n-1)) K_(n1)  +  K_(n2)  +  K_(n3)

with n1 = p^(m-n)(p^n - p^(n-1)), n2 = p^(n-1)(p^m - p^(m-1)) and
n3 = p^(m-1)(p^n - p^(n-1)) for every m, n >= 1. For m < n the factor
p^(m-n) is fractional but n1 simplifies to p^(m-1)(p - 1), so the size is
still an integer; it is computed with ``Fraction`` and checked.
"""

import logging
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from src.groups import GroupParams

from .ccc import CCCGraph
from .exceptions import GraphError, NotCliqueUnionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CliqueDecomposition:
    """Multiset of (count, size) parts, one per distinct clique size.

    Parts are merged by size and sorted by descending size, so equal
    multisets compare equal whatever order they were built in.
    """

    parts: tuple[tuple[int, int], ...]
    total_vertices: int
    total_edges: int

    @classmethod
    def from_parts(cls, parts: Iterable[tuple[int, int]]) -> "CliqueDecomposition":
        counts: Counter[int] = Counter()
        for count, size in parts:
            if count < 0 or size < 1:
                raise GraphError(
                    f"invalid clique part {count}xK{size}",
                    {"count": count, "size": size},
                )
            if count:
                counts[size] += count
        merged = tuple(
            sorted(((count, size) for size, count in counts.items()), key=_part_key)
        )
        return cls(
            parts=merged,
            total_vertices=sum(count * size for count, size in merged),
            total_edges=sum(count * size * (size - 1) // 2 for count, size in merged),
        )

    @property
    def num_cliques(self) -> int:
        return sum(count for count, _ in self.parts)

    def __str__(self) -> str:
        return "+".join(f"{count}xK{size}" for count, size in self.parts) or "empty"


def _part_key(part: tuple[int, int]) -> tuple[int, int]:
    count, size = part
    return (-size, -count)


def connected_components(graph: CCCGraph) -> list[list[int]]:
    """Components as sorted vertex lists, in order of their smallest vertex."""
    n = graph.num_vertices
    visited = np.zeros(n, dtype=bool)
    components: list[list[int]] = []
    for start in range(n):
        if visited[start]:
            continue
        visited[start] = True
        component = [start]
        frontier = np.array([start])
        while frontier.size:
            reach = np.bitwise_or.reduce(graph.packed[frontier], axis=0)
            fresh = np.unpackbits(reach, count=n).astype(bool) & ~visited
            frontier = np.flatnonzero(fresh)
            visited[frontier] = True
            component.extend(int(v) for v in frontier)
        components.append(sorted(component))
    return components


def decompose(graph: CCCGraph) -> CliqueDecomposition:
    """Decompose a graph into complete components.

    A connected component on k vertices is complete exactly when each of its
    vertices has degree k - 1.

    Raises:
        NotCliqueUnionError: If some component is not complete
    """
    sizes: list[int] = []
    for component_id, component in enumerate(connected_components(graph)):
        k = len(component)
        if np.any(graph.degrees[component] != k - 1):
            raise NotCliqueUnionError(component_id, component)
        sizes.append(k)
    return CliqueDecomposition.from_parts((1, k) for k in sizes)


def _exact_size(value: Fraction, label: str, params: GroupParams) -> int:
    if value.denominator != 1:
        raise GraphError(
            f"{label} is not an integer for {params.label}: {value}",
            {"params": params.key, label: str(value)},
        )
    return int(value)


def predicted_decomposition(params: GroupParams) -> CliqueDecomposition:
    """Closed-form decomposition, evaluated as written for any m, n >= 1."""
    p, m, n = params.p, params.m, params.n
    m1 = p**n - p ** (n - 1)
    n1 = _exact_size(Fraction(p) ** (m - n) * (p**n - p ** (n - 1)), "n1", params)
    n2 = p ** (n - 1) * (p**m - p ** (m - 1))
    n3 = p ** (m - 1) * (p**n - p ** (n - 1))
    return CliqueDecomposition.from_parts([(m1, n1), (1, n2), (1, n3)])
