"""Commuting conjugacy class graphs and their clique decompositions.

Example usage:
    from src.graphs import build_ccc, decompose

    graph = build_ccc(classes, params)
    print(decompose(graph))  # 3xK2
"""

from .ccc import CCCGraph, build_ccc
from .decomposition import (
    CliqueDecomposition,
    connected_components,
    decompose,
    predicted_decomposition,
)
from .exceptions import GraphError, NotCliqueUnionError

__all__ = [
    "CCCGraph",
    "CliqueDecomposition",
    "GraphError",
    "NotCliqueUnionError",
    "build_ccc",
    "connected_components",
    "decompose",
    "predicted_decomposition",
]
