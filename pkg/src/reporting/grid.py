"""Parameter grids for verification sweeps.

A grid is a set of primes and inclusive (m, n) ranges, bounded by a maximum
group order. By default only triples with m >= n are selected;
``include_swapped`` adds the m < n triples as well.

Grids come from command-line flags, from a YAML file, or both, with flags
taking precedence. Range values accept ``"lo..hi"``, ``"lo-hi"``, a single
integer or a two-element list.
"""

import logging
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.config import ConfigurationError, load_yaml_mapping
from src.groups import GroupParams, is_prime, make_params

from .exceptions import GridSpecError

logger = logging.getLogger(__name__)

DEFAULT_GRID_MAX_ORDER = 4096
DEFAULT_EXPONENT_RANGE = (1, 12)


def _bound(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int | str):
        raise ValueError(f"range bound must be an integer, got {value!r}")
    return int(value)


def parse_range(value: Any) -> tuple[int, int]:
    """Parse ``"lo..hi"``, ``"lo-hi"``, ``"k"``, ``k`` or ``[lo, hi]``."""
    if isinstance(value, bool):
        raise ValueError(f"invalid range {value!r}")
    if isinstance(value, int):
        return (value, value)
    if isinstance(value, list | tuple):
        if len(value) != 2:
            raise ValueError(f"range needs two bounds, got {value!r}")
        return (_bound(value[0]), _bound(value[1]))
    if isinstance(value, str):
        text = value.strip()
        for separator in ("..", "-"):
            if separator in text:
                lo, _, hi = text.partition(separator)
                return (int(lo), int(hi))
        return (int(text), int(text))
    raise ValueError(f"invalid range {value!r}")


class GridSpec(BaseModel):
    """Primes, exponent ranges and the order bound of a sweep."""

    primes: list[int] = Field(min_length=1)
    m_range: tuple[int, int] = DEFAULT_EXPONENT_RANGE
    n_range: tuple[int, int] = DEFAULT_EXPONENT_RANGE
    max_order: int = Field(default=DEFAULT_GRID_MAX_ORDER, ge=1)
    include_swapped: bool = False

    @field_validator("primes", mode="before")
    @classmethod
    def split_primes(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [part.strip() for part in value.split(",") if part.strip()]
        if isinstance(value, int) and not isinstance(value, bool):
            return [value]
        return value

    @field_validator("primes")
    @classmethod
    def check_primes(cls, value: list[int]) -> list[int]:
        composite = [p for p in value if not is_prime(p)]
        if composite:
            raise ValueError(f"not prime: {composite}")
        return sorted(set(value))

    @field_validator("m_range", "n_range", mode="before")
    @classmethod
    def coerce_range(cls, value: Any) -> tuple[int, int]:
        return parse_range(value)

    @model_validator(mode="after")
    def check_ranges(self) -> "GridSpec":
        for name in ("m_range", "n_range"):
            lo, hi = getattr(self, name)
            if lo < 1 or hi < lo:
                raise ValueError(f"{name} must satisfy 1 <= lo <= hi, got {lo}..{hi}")
        return self

    def triples(self) -> list[GroupParams]:
        """Selected parameter triples in (p, m, n) order."""
        selected: list[GroupParams] = []
        for p in self.primes:
            for m in range(self.m_range[0], self.m_range[1] + 1):
                for n in range(self.n_range[0], self.n_range[1] + 1):
                    if m < n and not self.include_swapped:
                        continue
                    if p ** (m + n + 1) > self.max_order:
                        continue
                    selected.append(make_params(p, m, n, max_order=None))
        return selected


def build_grid(
    grid_file: str | Path | None = None, **overrides: Any
) -> tuple[GridSpec, list[GroupParams]]:
    """Combine a YAML grid file with explicit overrides and expand it.

    Args:
        grid_file: Optional YAML file holding GridSpec fields
        **overrides: Field values taking precedence over the file; ``None``
            values are ignored

    Returns:
        The validated grid and its non-empty list of triples

    Raises:
        GridSpecError: If the grid is malformed or selects nothing
    """
    data: dict[str, Any] = {}
    if grid_file is not None:
        try:
            data.update(load_yaml_mapping(grid_file))
        except ConfigurationError as e:
            raise GridSpecError(str(e), e.details) from e
    data.update({key: value for key, value in overrides.items() if value is not None})

    try:
        spec = GridSpec.model_validate(data)
    except ValidationError as e:
        raise GridSpecError(
            f"Invalid grid: {e.errors()[0]['msg']}",
            {"errors": [error["msg"] for error in e.errors()]},
        ) from e

    triples = spec.triples()
    if not triples:
        raise GridSpecError(
            "grid selects no parameter triples",
            {"grid": spec.model_dump(mode="json")},
        )
    logger.info(
        "Expanded sweep grid",
        extra={"triples": len(triples), "max_order": spec.max_order},
    )
    return spec, triples
