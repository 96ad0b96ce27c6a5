"""YAML file loading for sweep definitions.

Grid files are plain YAML mappings. This module only turns a path into a
validated mapping; interpreting the keys is left to the caller's pydantic
model so that each file format keeps its own schema.
"""

import logging
from pathlib import Path
from typing import Any

import yaml

from .exceptions import ConfigurationFileError

logger = logging.getLogger(__name__)


def load_yaml_mapping(config_path: str | Path) -> dict[str, Any]:
    """Load a YAML file whose top level must be a mapping.

    An empty file yields an empty mapping.

    Args:
        config_path: Path to the YAML file

    Returns:
        Parsed mapping

    Raises:
        ConfigurationFileError: If the file is missing, unreadable, not valid
            YAML, or its top level is not a mapping
    """
    config_path = Path(config_path)

    if not config_path.exists():
        raise ConfigurationFileError(
            f"Configuration file not found: {config_path}", file_path=str(config_path)
        )

    if not config_path.is_file():
        raise ConfigurationFileError(
            f"Configuration path is not a file: {config_path}",
            file_path=str(config_path),
        )

    try:
        with open(config_path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigurationFileError(
            f"Failed to parse YAML configuration: {e}", file_path=str(config_path)
        ) from e
    except OSError as e:
        raise ConfigurationFileError(
            f"Failed to read configuration file: {e}", file_path=str(config_path)
        ) from e

    if data is None:
        data = {}

    if not isinstance(data, dict):
        raise ConfigurationFileError(
            "Configuration file must contain a mapping at the top level",
            file_path=str(config_path),
            details={"found_type": type(data).__name__},
        )

    logger.debug("Loaded YAML mapping", extra={"path": str(config_path)})
    return data
