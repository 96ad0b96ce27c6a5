"""The group family G(p, m, n) in exponent normal form.

Example usage:
    from src.groups import conjugacy_classes, make_params

    params = make_params(2, 2, 1)
    classes = conjugacy_classes(params)
"""

from .classes import (
    ConjugacyClass,
    center,
    class_of,
    conjugacy_classes,
    noncentral_classes,
)
from .elements import (
    IDENTITY,
    GroupElement,
    RelationReport,
    check_relations,
    commutator,
    commutes,
    conjugate,
    element_arrays,
    element_at,
    element_index,
    enumerate_elements,
    generators,
    inverse,
    make_element,
    multiply,
    multiply_arrays,
    power,
)
from .exceptions import (
    GroupError,
    NotPrimeError,
    OrderCapExceededError,
    ParameterRangeError,
)
from .params import GroupParams, check_order_cap, is_prime, make_params

__all__ = [
    "IDENTITY",
    "ConjugacyClass",
    "GroupElement",
    "GroupError",
    "GroupParams",
    "NotPrimeError",
    "OrderCapExceededError",
    "ParameterRangeError",
    "RelationReport",
    "center",
    "check_order_cap",
    "check_relations",
    "class_of",
    "commutator",
    "commutes",
    "conjugacy_classes",
    "conjugate",
    "element_arrays",
    "element_at",
    "element_index",
    "enumerate_elements",
    "generators",
    "inverse",
    "is_prime",
    "make_element",
    "make_params",
    "multiply",
    "multiply_arrays",
    "noncentral_classes",
    "power",
]
