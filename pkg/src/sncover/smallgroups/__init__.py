"""Explicit permutation groups of degree at most 8 and an exact set-cover solver."""

from .groups import (
    Group,
    Subgroup,
    alternating_group,
    bucket_by_type,
    load_catalog,
    maximal_subgroups,
    named_group,
    symmetric_group,
    uncovered_two_generated,
)
from .perm import Permutation, closure
from .setcover import CoverResult, SetCoverInstance, build_cover_instance, exact_min_cover

__all__ = [
    "CoverResult",
    "Group",
    "Permutation",
    "SetCoverInstance",
    "Subgroup",
    "alternating_group",
    "build_cover_instance",
    "bucket_by_type",
    "closure",
    "exact_min_cover",
    "load_catalog",
    "maximal_subgroups",
    "named_group",
    "symmetric_group",
    "uncovered_two_generated",
]
