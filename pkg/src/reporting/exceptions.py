"""Sweep and export exceptions."""

from typing import Any


class ReportingError(Exception):
    """Base exception for sweep, table and export errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        """Initialize reporting error.

        Args:
            message: Error message
            details: Optional dictionary with additional error details
        """
        super().__init__(message)
        self.details = details or {}


class GridSpecError(ReportingError):
    """Raised when a parameter grid is malformed or selects no triples."""


class ExportError(ReportingError):
    """Raised when a report cannot be written or read back."""

    def __init__(
        self,
        message: str,
        path: str | None = None,
        details: dict[str, Any] | None = None,
    ):
        """Initialize export error.

        Args:
            message: Error message
            path: Destination or source path, if any
            details: Optional dictionary with additional error details
        """
        super().__init__(message, details)
        self.path = path
