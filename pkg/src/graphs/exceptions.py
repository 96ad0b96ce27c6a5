"""Graph construction and decomposition exceptions."""

from typing import Any


class GraphError(Exception):
    """Base exception for CCC graph errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        """Initialize graph error.

        Args:
            message: Error message
            details: Optional dictionary with additional error details
        """
        super().__init__(message)
        self.details = details or {}


class NotCliqueUnionError(GraphError):
    """Raised when a connected component is not a complete graph."""

    def __init__(self, component_id: int, vertices: list[int]):
        """Initialize not-clique-union error.

        Args:
            component_id: Position of the offending component in discovery order
            vertices: Vertex positions of the component
        """
        super().__init__(
            f"component {component_id} on {len(vertices)} vertices is not a clique",
            {"component_id": component_id, "vertices": vertices[:16]},
        )
        self.component_id = component_id
        self.vertices = vertices
