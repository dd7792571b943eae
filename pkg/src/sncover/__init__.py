"""Covering numbers of symmetric groups: exact counts, covers and checks."""

from .cycletype import CycleType, class_size, is_even, parity
from .errors import (
    CatalogError,
    DomainError,
    ResourceLimitError,
    SnCoverError,
    UnsupportedFamilyError,
)
from .families import (
    SubgroupFamily,
    count_type_in_member,
    member_count,
    member_order,
    order_bound_primitive,
    parse_family,
)
from .witness import (
    build_H,
    build_Pi,
    partition_check,
    pi_prime_18,
    sigma_18,
    sigma_formula,
    sigma_upper_bound,
    uncovered_types,
)

__version__ = "0.1.0"

__all__ = [
    "CatalogError",
    "CycleType",
    "DomainError",
    "ResourceLimitError",
    "SnCoverError",
    "SubgroupFamily",
    "UnsupportedFamilyError",
    "build_H",
    "build_Pi",
    "class_size",
    "count_type_in_member",
    "is_even",
    "member_count",
    "member_order",
    "order_bound_primitive",
    "parity",
    "parse_family",
    "partition_check",
    "pi_prime_18",
    "sigma_18",
    "sigma_formula",
    "sigma_upper_bound",
    "uncovered_types",
]
