"""Adjacency, Laplacian and signless Laplacian matrices of a CCC graph."""

import numpy as np

from src.config.settings import DEFAULT_MATRIX_CAP
from src.graphs import CCCGraph

from .exceptions import DimensionCapExceededError
from .models import IntegerMatrix


def matrices_from_graph(
    graph: CCCGraph, matrix_cap: int = DEFAULT_MATRIX_CAP
) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return (A, L, Q) with L = D - A and Q = D + A.

    Raises:
        DimensionCapExceededError: If the graph has more than ``matrix_cap``
            vertices
    """
    if graph.num_vertices > matrix_cap:
        raise DimensionCapExceededError(graph.num_vertices, matrix_cap)
    adjacency = graph.dense()
    degree = np.diag(graph.degrees.astype(np.int64))
    return (
        IntegerMatrix.from_rows(adjacency),
        IntegerMatrix.from_rows(degree - adjacency),
        IntegerMatrix.from_rows(degree + adjacency),
    )
