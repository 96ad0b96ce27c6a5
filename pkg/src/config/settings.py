"""Runtime settings for the CCC toolkit.

Settings come from three layers, lowest precedence first:

1. Defaults declared on :class:`CCCSettings`
2. Environment variables with the ``CCC_`` prefix (and an optional ``.env``)
3. Explicit overrides, normally command-line flags

Environment variables:
- CCC_MAX_ORDER: Largest group order the brute-force oracle enumerates
  (default: 2**20)
- CCC_MATRIX_CAP: Largest matrix dimension handed to the eigenvalue oracle
  (default: 512)
- CCC_WORKERS: Worker threads used by verification sweeps (default: 1)
- CCC_LOG_LEVEL: Logging level (default: INFO)
- CCC_LOG_JSON: Render log lines as JSON (default: false)
"""

from enum import Enum
from typing import Any

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from .exceptions import ConfigurationValidationError

DEFAULT_MAX_ORDER = 2**20
DEFAULT_MATRIX_CAP = 512


class LogLevel(str, Enum):
    """Supported logging levels."""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class CCCSettings(BaseSettings):
    """Caps and runtime knobs shared by the library and the CLI."""

    max_order: int = Field(
        default=DEFAULT_MAX_ORDER,
        ge=1,
        description="Largest group order enumerated by the brute-force oracle",
    )
    matrix_cap: int = Field(
        default=DEFAULT_MATRIX_CAP,
        ge=1,
        description="Largest matrix dimension accepted by the eigenvalue oracle",
    )
    workers: int = Field(
        default=1, ge=1, le=64, description="Worker threads for sweep cells"
    )
    log_level: LogLevel = Field(default=LogLevel.INFO, description="Logging level")
    log_json: bool = Field(default=False, description="Emit JSON log lines")

    model_config = SettingsConfigDict(
        env_prefix="CCC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


def resolve_settings(**overrides: Any) -> CCCSettings:
    """Build settings from the environment, then apply explicit overrides.

    Overrides whose value is ``None`` are ignored so that unset CLI flags fall
    through to the environment.

    Args:
        **overrides: Field values that take precedence over the environment

    Returns:
        Validated settings

    Raises:
        ConfigurationValidationError: If any layer holds an invalid value
    """
    explicit = {key: value for key, value in overrides.items() if value is not None}
    try:
        base = CCCSettings()
        if not explicit:
            return base
        return CCCSettings.model_validate({**base.model_dump(), **explicit})
    except ValidationError as e:
        raise ConfigurationValidationError(
            f"Invalid settings: {e.error_count()} error(s)",
            validation_errors=e.errors(),
            details={"overrides": explicit},
        ) from e
