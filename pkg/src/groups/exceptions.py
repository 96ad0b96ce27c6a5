"""Group construction exceptions."""

from typing import Any


class GroupError(Exception):
    """Base exception for group construction and enumeration errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        """Initialize group error.

        Args:
            message: Error message
            details: Optional dictionary with additional error details
        """
        super().__init__(message)
        self.details = details or {}


class NotPrimeError(GroupError):
    """Raised when the prime parameter p is not prime."""

    def __init__(self, p: int):
        """Initialize not-prime error.

        Args:
            p: The rejected value
        """
        super().__init__(f"p must be prime, got {p}", {"p": p})
        self.p = p


class ParameterRangeError(GroupError):
    """Raised when m or n is out of range for the requested params."""

    def __init__(self, name: str, value: int, message: str | None = None):
        """Initialize parameter range error.

        Args:
            name: Parameter name ("m" or "n")
            value: The rejected value
            message: Replaces the default "must be >= 1" message
        """
        super().__init__(message or f"{name} must be >= 1, got {value}", {name: value})
        self.name = name
        self.value = value


class OrderCapExceededError(GroupError):
    """Raised when the group order exceeds the configured enumeration cap."""

    def __init__(self, order: int, cap: int):
        """Initialize order cap error.

        Args:
            order: Group order p^(m+n+1)
            cap: Configured maximum order
        """
        super().__init__(
            f"group order {order} exceeds the configured cap {cap}",
            {"order": order, "cap": cap},
        )
        self.order = order
        self.cap = cap
