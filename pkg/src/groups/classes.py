"""Center and conjugacy classes of G(p, m, n).

x and y generate the group, so an element commutes with everything exactly
when it commutes with x and with y; :func:`center` only tests those two.

Conjugation by a product is the composition of conjugations
(g^(hk) = (g^h)^k), so the orbit of g under conjugation by the whole group
equals its closure under conjugation by x and y. :func:`conjugacy_classes`
computes orbits by breadth-first closure under those two maps only.
"""

import logging
from collections import deque
from dataclasses import dataclass

from src.config.settings import DEFAULT_MAX_ORDER

from .elements import (
    GroupElement,
    commutes,
    conjugate,
    element_at,
    element_index,
    enumerate_elements,
    generators,
)
from .exceptions import GroupError
from .params import GroupParams, check_order_cap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugation orbit; the representative is its lowest-index member."""

    representative: GroupElement
    members: frozenset[GroupElement]

    @property
    def is_central(self) -> bool:
        return len(self.members) == 1

    @property
    def size(self) -> int:
        return len(self.members)


def center(
    params: GroupParams, max_order: int = DEFAULT_MAX_ORDER
) -> set[GroupElement]:
    """Elements commuting with both generators.

    Raises:
        OrderCapExceededError: If the group order exceeds ``max_order``
    """
    check_order_cap(params, max_order)
    x, y, _ = generators(params)
    return {
        g
        for g in enumerate_elements(params)
        if commutes(g, x, params) and commutes(g, y, params)
    }


def class_of(g: GroupElement, params: GroupParams) -> ConjugacyClass:
    """Conjugacy class of a single element by generator closure."""
    members = _orbit(g, params)
    representative = min(members, key=lambda h: element_index(h, params))
    return ConjugacyClass(representative, frozenset(members))


def _orbit(g: GroupElement, params: GroupParams) -> set[GroupElement]:
    x, y, _ = generators(params)
    seen = {g}
    queue = deque([g])
    while queue:
        current = queue.popleft()
        for h in (x, y):
            image = conjugate(current, h, params)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def conjugacy_classes(
    params: GroupParams, max_order: int = DEFAULT_MAX_ORDER
) -> list[ConjugacyClass]:
    """Partition the group into conjugacy classes.

    Classes come out in increasing order of their representatives' indices,
    which makes class ids stable across runs.

    Args:
        params: Group parameters
        max_order: Largest order this call may enumerate

    Returns:
        Classes ordered by representative index

    Raises:
        OrderCapExceededError: If the group order exceeds ``max_order``
        GroupError: If a class size does not divide the group order
    """
    check_order_cap(params, max_order)

    assigned = bytearray(params.order)
    classes: list[ConjugacyClass] = []
    for index in range(params.order):
        if assigned[index]:
            continue
        cls = class_of(element_at(index, params), params)
        representative, members = cls.representative, cls.members
        for member in members:
            assigned[element_index(member, params)] = 1
        if params.order % len(members):
            raise GroupError(
                f"class of {representative} has size {len(members)} "
                f"which does not divide {params.order}",
                {"params": params.key, "size": len(members)},
            )
        classes.append(cls)

    logger.debug(
        "Computed conjugacy classes",
        extra={
            "params": params.label,
            "classes": len(classes),
            "central": sum(1 for cls in classes if cls.is_central),
        },
    )
    return classes


def noncentral_classes(classes: list[ConjugacyClass]) -> list[ConjugacyClass]:
    return [cls for cls in classes if not cls.is_central]
