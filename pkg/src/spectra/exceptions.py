"""Spectral computation exceptions."""

from typing import Any


class SpectralError(Exception):
    """Base exception for spectrum and energy computations."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        """Initialize spectral error.

        Args:
            message: Error message
            details: Optional dictionary with additional error details
        """
        super().__init__(message)
        self.details = details or {}


class WrongKindError(SpectralError):
    """Raised when an energy is requested from a spectrum of the wrong matrix."""

    def __init__(self, expected: str, actual: str):
        """Initialize wrong-kind error.

        Args:
            expected: Matrix kind the operation needs
            actual: Matrix kind of the supplied spectrum
        """
        super().__init__(
            f"expected a {expected} spectrum, got {actual}",
            {"expected": expected, "actual": actual},
        )
        self.expected = expected
        self.actual = actual


class EmptyGraphError(SpectralError):
    """Raised when a mean degree is needed for a graph with no vertices."""

    def __init__(self) -> None:
        """Initialize empty graph error."""
        super().__init__("mean degree is undefined for a graph with no vertices")


class DimensionCapExceededError(SpectralError):
    """Raised when a matrix is larger than the eigenvalue oracle accepts."""

    def __init__(self, dimension: int, cap: int):
        """Initialize dimension cap error.

        Args:
            dimension: Matrix dimension
            cap: Configured maximum dimension
        """
        super().__init__(
            f"matrix dimension {dimension} exceeds the configured cap {cap}",
            {"dimension": dimension, "cap": cap},
        )
        self.dimension = dimension
        self.cap = cap


class NotMonicError(SpectralError):
    """Raised when root extraction is given a polynomial that is not monic."""

    def __init__(self, leading: int | None):
        """Initialize not-monic error.

        Args:
            leading: Leading coefficient, or None for an empty coefficient list
        """
        super().__init__(
            f"polynomial must be monic, leading coefficient is {leading}",
            {"leading": leading},
        )
        self.leading = leading
