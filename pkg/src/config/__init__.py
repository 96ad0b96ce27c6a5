"""Configuration for the CCC toolkit.

Settings are read from ``CCC_*`` environment variables with CLI overrides on
top; sweep grids may also be described in YAML files.

Example usage:
    from src.config import resolve_settings

    settings = resolve_settings(max_order=4096)
    cap = settings.matrix_cap
"""

from .exceptions import (
    ConfigurationError,
    ConfigurationFileError,
    ConfigurationValidationError,
)
from .loader import load_yaml_mapping
from .settings import (
    DEFAULT_MATRIX_CAP,
    DEFAULT_MAX_ORDER,
    CCCSettings,
    LogLevel,
    resolve_settings,
)

__all__ = [
    "DEFAULT_MATRIX_CAP",
    "DEFAULT_MAX_ORDER",
    "CCCSettings",
    "ConfigurationError",
    "ConfigurationFileError",
    "ConfigurationValidationError",
    "LogLevel",
    "load_yaml_mapping",
    "resolve_settings",
]
