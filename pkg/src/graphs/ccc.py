"""Commuting conjugacy class graph.

Vertices are the noncentral conjugacy classes; two distinct classes X and Y
are adjacent when some x' in X commutes with some y' in Y.

It is enough to fix one representative x of X and scan every member of Y.
If x'y' = y'x' with x' = x^h, conjugating by h^-1 gives x (y')^(h^-1) =
(y')^(h^-1) x, and (y')^(h^-1) is again a member of Y. So X ~ Y iff x
commutes with some member of Y. :func:`build_ccc` therefore computes, for each
representative, the set of all group elements it commutes with in one
vectorised pass and maps those elements to their classes.

Adjacency is stored as bit-packed rows (``numpy.packbits``) so graphs with a
few thousand vertices stay small in memory.
"""

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np

from src.groups import (
    ConjugacyClass,
    GroupParams,
    element_arrays,
    element_index,
    multiply_arrays,
)

logger = logging.getLogger(__name__)


def _empty_rows(num_vertices: int) -> np.ndarray:
    return np.zeros((num_vertices, (num_vertices + 7) // 8), dtype=np.uint8)


@dataclass(eq=False)
class CCCGraph:
    """Simple undirected graph on noncentral classes.

    Attributes:
        vertices: Class id (position in the class list) of each vertex
        packed: Bit-packed adjacency rows, shape (V, ceil(V / 8))
        degrees: Degree of each vertex
        edge_count: Number of edges
    """

    vertices: tuple[int, ...]
    packed: np.ndarray
    degrees: np.ndarray
    edge_count: int

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def row(self, i: int) -> np.ndarray:
        """Boolean adjacency row of vertex position i."""
        return np.unpackbits(self.packed[i], count=self.num_vertices).astype(bool)

    def is_adjacent(self, i: int, j: int) -> bool:
        return bool((self.packed[i, j >> 3] >> (7 - (j & 7))) & 1)

    def neighbors(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.row(i))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (i, j) with i < j, in lexicographic order."""
        for i in range(self.num_vertices):
            for j in self.neighbors(i):
                if j > i:
                    yield i, int(j)

    def dense(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix as int64."""
        return np.unpackbits(self.packed, axis=1, count=self.num_vertices).astype(
            np.int64
        )

    def is_symmetric(self, chunk: int = 256) -> bool:
        """True when adjacency is symmetric and loop-free."""
        n = self.num_vertices
        for start in range(0, n, chunk):
            stop = min(start + chunk, n)
            rows = np.unpackbits(self.packed[start:stop], axis=1, count=n)
            columns = np.stack(
                [
                    (self.packed[:, j >> 3] >> (7 - (j & 7))) & 1
                    for j in range(start, stop)
                ],
                axis=1,
            )
            if not np.array_equal(rows.T, columns):
                return False
            if rows[np.arange(stop - start), np.arange(start, stop)].any():
                return False
        return True

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.num_vertices))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_edges(
        cls, num_vertices: int, edges: Iterable[tuple[int, int]]
    ) -> "CCCGraph":
        """Build a graph directly from an edge list; loops are ignored."""
        rows = np.zeros((num_vertices, num_vertices), dtype=bool)
        for i, j in edges:
            if i != j:
                rows[i, j] = rows[j, i] = True
        return cls.from_dense(rows)

    @classmethod
    def from_dense(cls, matrix: np.ndarray) -> "CCCGraph":
        rows = np.asarray(matrix, dtype=bool)
        degrees = rows.sum(axis=1).astype(np.int64)
        return cls(
            vertices=tuple(range(rows.shape[0])),
            packed=np.packbits(rows, axis=1)
            if rows.size
            else _empty_rows(rows.shape[0]),
            degrees=degrees,
            edge_count=int(degrees.sum()) // 2,
        )


def build_ccc(classes: Sequence[ConjugacyClass], params: GroupParams) -> CCCGraph:
    """Build the CCC graph of G(p, m, n) from its full class partition.

    Args:
        classes: Every conjugacy class of the group, e.g. from
            :func:`src.groups.conjugacy_classes`
        params: Group parameters

    Returns:
        Graph whose vertex i is the i-th noncentral class in ``classes``
    """
    vertex_ids = [cid for cid, cls in enumerate(classes) if not cls.is_central]
    num_vertices = len(vertex_ids)

    vertex_of = np.full(params.order, -1, dtype=np.int64)
    for position, cid in enumerate(vertex_ids):
        for member in classes[cid].members:
            vertex_of[element_index(member, params)] = position

    everything = element_arrays(params)
    packed = _empty_rows(num_vertices)
    degrees = np.zeros(num_vertices, dtype=np.int64)
    for position, cid in enumerate(vertex_ids):
        rep = classes[cid].representative
        left = multiply_arrays(rep, everything, params)
        right = multiply_arrays(everything, rep, params)
        mask = (left[0] == right[0]) & (left[1] == right[1]) & (left[2] == right[2])
        hits = vertex_of[mask]
        row = np.zeros(num_vertices, dtype=bool)
        row[hits[hits >= 0]] = True
        row[position] = False
        packed[position] = np.packbits(row)
        degrees[position] = int(row.sum())

    graph = CCCGraph(
        vertices=tuple(vertex_ids),
        packed=packed,
        degrees=degrees,
        edge_count=int(degrees.sum()) // 2,
    )
    logger.debug(
        "Built CCC graph",
        extra={
            "params": params.label,
            "vertices": num_vertices,
            "edges": graph.edge_count,
        },
    )
    return graph
