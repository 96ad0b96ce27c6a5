"""Errors raised while resolving settings or reading sweep grid files.

Every error carries a ``details`` dictionary; the CLI prints the message and
exits with the usage code.
"""

from typing import Any


class ConfigurationError(Exception):
    """Base class for settings and grid-file errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.details = details or {}


class ConfigurationFileError(ConfigurationError):
    """A grid file is missing, unreadable, unparsable or not a YAML mapping.

    The path is also recorded in ``details["file_path"]``.
    """

    def __init__(
        self,
        message: str,
        file_path: str | None = None,
        details: dict[str, Any] | None = None,
    ):
        merged = dict(details or {})
        if file_path is not None:
            merged.setdefault("file_path", file_path)
        super().__init__(message, merged)
        self.file_path = file_path


class ConfigurationValidationError(ConfigurationError):
    """``CCC_*`` variables or CLI overrides failed pydantic validation.

    Args:
        message: First validation message, prefixed for display
        validation_errors: The pydantic error entries
        details: Extra context such as the rejected overrides
    """

    def __init__(
        self,
        message: str,
        validation_errors: list[Any] | None = None,
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message, details)
        self.validation_errors = validation_errors or []

    @property
    def fields(self) -> list[str]:
        """Dotted locations of the rejected settings, in pydantic's order."""
        return [
            ".".join(str(part) for part in error.get("loc", ()))
            for error in self.validation_errors
            if isinstance(error, dict)
        ]
