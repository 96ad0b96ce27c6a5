"""Closed-form evaluation exceptions."""

from typing import Any


class FormulaError(Exception):
    """Raised when a closed form that must be an integer evaluates otherwise."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        """Initialize formula error.

        Args:
            message: Error message
            details: Optional dictionary with additional error details
        """
        super().__init__(message)
        self.details = details or {}
