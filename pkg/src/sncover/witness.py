"""The cover H, the witness classes Pi, and the closed-form covering numbers.

For n divisible by 6 the cover H consists of every S_{n/2} wr S_2, A_n, and
every S_i x S_{n-i} with 1 <= i <= n/3 - 1. Each witness class Pi_i is a single
cycle type whose elements lie in exactly one member of H, which forces every
member of H into any cover built from maximal subgroups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .cycletype import DEFAULT_PARTITION_CEILING, CycleType, all_types, class_size
from .errors import DomainError, ResourceLimitError, SnCoverError
from .families import (
    ALTERNATING,
    INTRANSITIVE,
    WR2,
    SubgroupFamily,
    alternating,
    contains_type,
    count_type_in_member,
    intransitive,
    member_count,
    parse_family,
    wr2,
)

#: Value printed for sigma(S_18); compared against, never substituted for, the computed sum.
SIGMA_18_STATED = 36772


@dataclass(frozen=True)
class WitnessClass:
    index: int
    cycle_type: CycleType
    size: int

    def to_dict(self) -> dict:
        return {"index": self.index, "type": str(self.cycle_type), "size": str(self.size)}


@dataclass(frozen=True)
class CoverPlan:
    """A collection of whole conjugacy classes of maximal subgroups of S_n."""

    n: int
    families: tuple[SubgroupFamily, ...]

    def __post_init__(self):
        specs = [f.spec for f in self.families]
        if len(set(specs)) != len(specs):
            raise DomainError(f"family listed twice in plan: {specs}")
        if any(f.degree != self.n for f in self.families):
            raise DomainError("all families of a plan must have the plan's degree")

    @property
    def size(self) -> int:
        return sum(member_count(f) for f in self.families)

    def specs(self) -> list[str]:
        return [f.spec for f in self.families]

    def without(self, *specs: str) -> CoverPlan:
        drop = {parse_family(s, self.n).spec for s in specs}
        missing = drop - set(self.specs())
        if missing:
            raise DomainError(f"plan has no family {sorted(missing)}")
        return CoverPlan(self.n, tuple(f for f in self.families if f.spec not in drop))


def _check_mod6(n: int, minimum: int) -> None:
    if n % 6 or n < minimum:
        raise DomainError(f"need n divisible by 6 and n >= {minimum}, got n={n}")


def build_H(n: int, s18_variant: bool = False) -> CoverPlan:
    """The cover H for n divisible by 6.

    With ``s18_variant`` (n = 18 only) the S_2 x S_16 class is left out, giving
    the smaller cover that is minimal at n = 18.
    """
    _check_mod6(n, 18)
    if s18_variant and n != 18:
        raise DomainError("the S_18 variant only exists for n = 18")
    ks = [1, 3, 4, 5] if s18_variant else list(range(1, n // 3))
    return CoverPlan(n, (wr2(n), alternating(n), *(intransitive(n, k) for k in ks)))


def _witness(index: int, lengths, n: int) -> WitnessClass:
    t = CycleType.from_lengths(lengths, n)
    return WitnessClass(index, t, class_size(t))


def pi_type(n: int, i: int) -> tuple[int, ...]:
    """Cycle lengths of the witness class Pi_i (n divisible by 6, -1 <= i <= n/3 - 1)."""
    h = n // 2
    if i == -1:
        return (n,)
    if i == 0:
        return (h - 1, h + 1) if h % 2 == 0 else (h - 2, h + 2)
    if i == 1:
        return (1, h - 2, h + 1)
    rest = n - i
    if i % 2:
        return (i, rest // 2, rest - rest // 2)
    half = rest // 2
    if half % 2:
        return (i, half, half)
    if i > 2:
        return (i, half - 1, half + 1)
    return (2, h - 4, h + 2)


def build_Pi(n: int) -> list[WitnessClass]:
    """Witness classes Pi_{-1}, ..., Pi_{n/3-1} for n divisible by 6, n >= 24."""
    _check_mod6(n, 24)
    return [_witness(i, pi_type(n, i), n) for i in range(-1, n // 3)]


def pi_prime_18() -> list[WitnessClass]:
    """The six witness classes used at n = 18, indexed by the family they pin down."""
    spec = [(-1, (18,)), (0, (7, 11)), (1, (1, 7, 10)), (3, (3, 7, 8)), (4, (4, 7, 7)), (5, (5, 6, 7))]
    return [_witness(i, lengths, 18) for i, lengths in spec]


def witness_classes(n: int, s18_variant: bool = False) -> list[WitnessClass]:
    if n == 18 and s18_variant:
        return pi_prime_18()
    return build_Pi(n)


def intersection_profile(f: SubgroupFamily, pi: list[WitnessClass]) -> list[int]:
    """|M cap Pi_i| for one fixed member M of ``f``, for each witness class in order."""
    return [count_type_in_member(f, w.cycle_type) for w in pi]


def family_index(f: SubgroupFamily) -> int:
    """Witness index that a family of H is paired with (-1 wr2, 0 A_n, i for S_i x S_{n-i})."""
    if f.kind == WR2:
        return -1
    if f.kind == ALTERNATING:
        return 0
    if f.kind == INTRANSITIVE:
        return f.k
    raise DomainError(f"{f.spec} is not a family of H")


@dataclass
class Identity:
    name: str
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": str(self.lhs), "rhs": str(self.rhs), "pass": self.passed}


@dataclass
class PartitionReport:
    n: int
    classes: list[WitnessClass]
    families: list[dict]
    identities: list[Identity] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(x.passed for x in self.identities)

    @property
    def first_failure(self) -> Identity | None:
        return next((x for x in self.identities if not x.passed), None)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "classes": [c.to_dict() for c in self.classes],
            "families": self.families,
            "identities": [x.to_dict() for x in self.identities],
            "pass": self.passed,
        }


def partition_check(n: int, s18_variant: bool = False) -> PartitionReport:
    """Check that the members of H partition Pi, exactly, at the level of counts.

    Because every element of Pi lies in at least one member of H, the per-class
    identity sum_f |f| * |member cap Pi_i| = |Pi_i| holds iff each element of Pi
    lies in exactly one member.
    """
    if n == 18 and not s18_variant:
        raise DomainError("n = 18 uses the variant cover and witness set (s18_variant=True)")
    plan = build_H(n, s18_variant)
    pi = witness_classes(n, s18_variant)
    rows = []
    report = PartitionReport(n, pi, rows)
    per_class = [0] * len(pi)
    total = 0
    for f in plan.families:
        prof = intersection_profile(f, pi)
        count = member_count(f)
        rows.append({"spec": f.spec, "members": str(count), "per_member_intersections": [str(x) for x in prof]})
        for j, x in enumerate(prof):
            per_class[j] += count * x
        total += count * sum(prof)
        met = [pi[j].index for j, x in enumerate(prof) if x]
        report.identities.append(Identity(f"{f.spec} meets only Pi_{family_index(f)}", len(met) == 1 and met[0] == family_index(f), True))
    for j, w in enumerate(pi):
        report.identities.append(Identity(f"sum_f |f|*|f cap Pi_{w.index}| = |Pi_{w.index}|", per_class[j], w.size))
    report.identities.append(Identity("sum_f |f|*|f cap Pi| = |Pi|", total, sum(w.size for w in pi)))
    return report


def _plan_flags(plan: CoverPlan) -> tuple[int, bool, bool]:
    kmask = 0
    has_alt = has_wr2 = False
    for f in plan.families:
        if f.kind == INTRANSITIVE:
            kmask |= 1 << f.k
        elif f.kind == ALTERNATING:
            has_alt = True
        elif f.kind == WR2:
            has_wr2 = True
        else:
            raise DomainError(f"type-level cover check does not model {f.spec}")
    return kmask, has_alt, has_wr2


def uncovered_types(plan: CoverPlan, ceiling: int = DEFAULT_PARTITION_CEILING) -> list[CycleType]:
    """Cycle types of S_n lying in no member of any family of the plan.

    An empty list means the plan is a cover of S_n. Membership is decided per
    type: a fixed point or a sub-multiset of cycles summing to k puts a type in
    S_k x S_{n-k}; even types lie in A_n; sub-sum n/2 or all-even lengths put a
    type in S_{n/2} wr S_2.
    """
    n = plan.n
    if n > ceiling:
        raise ResourceLimitError(f"type sweep for n={n} exceeds ceiling {ceiling}")
    if n > 62:
        raise ResourceLimitError("type sweep kernel is limited to n <= 62")
    kmask, has_alt, has_wr2 = _plan_flags(plan)
    kmask_u = np.uint64(kmask)
    cap = 4096
    while True:
        out = np.zeros((cap, n), dtype=np.int64)
        found = K.sweep_uncovered(n, kmask_u, has_alt, has_wr2, out)
        if found <= cap:
            break
        cap = found
    return [CycleType.from_lengths([int(x) for x in row if x], n) for row in out[:found]]


def uncovered_types_reference(plan: CoverPlan, ceiling: int = DEFAULT_PARTITION_CEILING) -> list[CycleType]:
    """Same answer as :func:`uncovered_types`, via per-type membership predicates."""
    return [t for t in all_types(plan.n, ceiling) if not any(contains_type(f, t) for f in plan.families)]


def sigma_formula(n: int) -> int:
    """(1/2) C(n, n/2) + sum_{i=0}^{n/3-1} C(n, i) for n divisible by 6, n >= 24."""
    _check_mod6(n, 24)
    return math.comb(n, n // 2) // 2 + sum(math.comb(n, i) for i in range(n // 3))


@dataclass(frozen=True)
class Sigma18:
    stated: int
    formula_sum: int
    cover_enumeration: int

    @property
    def computed_agree(self) -> bool:
        return self.formula_sum == self.cover_enumeration

    @property
    def matches_stated(self) -> bool:
        return self.formula_sum == self.stated

    def to_dict(self) -> dict:
        return {
            "stated": str(self.stated),
            "formula_sum": str(self.formula_sum),
            "cover_enumeration": str(self.cover_enumeration),
            "computed_agree": self.computed_agree,
            "matches_stated": self.matches_stated,
            "difference": str(self.formula_sum - self.stated),
        }


def sigma_18() -> Sigma18:
    """The printed value 36772 next to the two independent computations."""
    formula = math.comb(18, 9) // 2 + sum(math.comb(18, i) for i in (0, 1, 3, 4, 5))
    cover = build_H(18, s18_variant=True).size
    return Sigma18(SIGMA_18_STATED, formula, cover)


def upper_bound_plan(n: int) -> CoverPlan:
    """The explicit cover behind :func:`sigma_upper_bound`."""
    if n % 2 or n < 4:
        raise DomainError(f"need even n >= 4, got n={n}")
    t = n // 3
    if n % 6 == 0:
        if n == 18:
            return build_H(18, s18_variant=True)
        ks = list(range(1, t))
    elif n % 6 == 2:
        if n < 8:
            raise DomainError("n = 2: S_2 is cyclic and has no cover")
        ks = list(range(1, t + 1))
    else:
        if n < 10:
            raise DomainError("the n = 4 (mod 6) construction needs n >= 10")
        ks = [k for k in range(1, t + 1) if k != t - 1]
    return CoverPlan(n, (wr2(n), alternating(n), *(intransitive(n, k) for k in ks)))


def sigma_upper_bound(n: int, validate: bool | None = None, ceiling: int = DEFAULT_PARTITION_CEILING) -> int:
    """Upper bound on sigma(S_n) for even n from an explicit cover.

    n = 0 (mod 6): the closed form (the S_18 variant cover at n = 18);
    n = 2 (mod 6): (1/2) C(n, n/2) + sum_{i <= n/3} C(n, i);
    n = 4 (mod 6): (1/2) C(n, n/2) + sum_{i <= n/3 - 2} C(n, i) + C(n, floor(n/3)).
    For n = 4 (mod 6) the cover is re-checked type by type when n <= ceiling.
    """
    plan = upper_bound_plan(n)
    if validate is None:
        validate = n % 6 == 4 and n <= ceiling
    if validate:
        bad = uncovered_types(plan, ceiling)
        if bad:
            raise SnCoverError(f"upper-bound plan for n={n} misses types {[str(t) for t in bad[:5]]}")
    bound = plan.size
    if n % 6 == 0 and n >= 24:
        assert bound == sigma_formula(n)
    return bound
