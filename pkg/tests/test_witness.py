import math

import pytest

from sncover.cycletype import CycleType, class_size
from sncover.errors import DomainError, ResourceLimitError
from sncover.families import count_type_in_member, intransitive, member_count
from sncover.witness import (
    CoverPlan,
    build_H,
    build_Pi,
    family_index,
    intersection_profile,
    partition_check,
    pi_prime_18,
    pi_type,
    sigma_18,
    sigma_formula,
    sigma_upper_bound,
    uncovered_types,
    uncovered_types_reference,
    upper_bound_plan,
)

PI_24 = [(24,), (11, 13), (1, 10, 13), (2, 11, 11), (3, 10, 11), (4, 9, 11), (5, 9, 10), (6, 9, 9), (7, 8, 9)]
PI_30 = [(30,), (13, 17), (1, 13, 16), (2, 11, 17), (3, 13, 14), (4, 13, 13), (5, 12, 13),
         (6, 11, 13), (7, 11, 12), (8, 11, 11), (9, 10, 11)]


def test_pi_types_hand_checked():
    assert [pi_type(24, i) for i in range(-1, 8)] == PI_24
    assert [pi_type(30, i) for i in range(-1, 10)] == PI_30
    assert [w.index for w in build_Pi(24)] == list(range(-1, 8))
    assert pi_type(36, 2) == (2, 17, 17)
    assert pi_type(42, 2) == (2, 17, 23)
    assert pi_type(48, 2) == (2, 23, 23)


def test_pi_classes_sizes():
    for w in build_Pi(30):
        assert w.size == class_size(w.cycle_type)
        assert w.cycle_type.degree == 30


def test_build_H_shape():
    plan = build_H(24)
    assert plan.specs() == ["wr2", "alternating"] + [f"intransitive:{i}" for i in range(1, 8)]
    assert plan.size == sigma_formula(24)
    assert build_H(18, s18_variant=True).specs() == ["wr2", "alternating", "intransitive:1", "intransitive:3",
                                                       "intransitive:4", "intransitive:5"]
    with pytest.raises(DomainError):
        build_H(20)
    with pytest.raises(DomainError):
        build_H(24, s18_variant=True)
    with pytest.raises(DomainError):
        build_Pi(18)


def test_plan_without():
    plan = build_H(24).without("alternating", "intransitive:3")
    assert "alternating" not in plan.specs() and "intransitive:3" not in plan.specs()
    with pytest.raises(DomainError):
        plan.without("alternating")
    with pytest.raises(DomainError):
        CoverPlan(24, (intransitive(24, 3), intransitive(24, 3)))


def test_sigma_values():
    assert sigma_formula(24) == 1888233
    assert sigma_formula(30) == 100522847
    with pytest.raises(DomainError):
        sigma_formula(18)


def test_sigma_18_triple():
    s = sigma_18()
    assert s.stated == 36772
    assert s.formula_sum == s.cover_enumeration == 24310 + 1 + 18 + 816 + 3060 + 8568
    assert s.computed_agree
    assert not s.matches_stated
    assert s.to_dict()["difference"] == "1"


def test_sigma_upper_bounds():
    assert sigma_upper_bound(24) == sigma_formula(24)
    c = math.comb
    assert sigma_upper_bound(22) == c(22, 11) // 2 + sum(c(22, i) for i in range(6)) + c(22, 7)
    assert sigma_upper_bound(26) == c(26, 13) // 2 + sum(c(26, i) for i in range(9))
    assert sigma_upper_bound(18) == sigma_18().formula_sum
    assert sigma_upper_bound(8) == 72 and sigma_upper_bound(10) == 257 and sigma_upper_bound(12) == 761
    with pytest.raises(DomainError):
        sigma_upper_bound(25)


@pytest.mark.parametrize("n", [10, 16, 22, 28, 34, 40, 46, 52, 58])
def test_upper_bound_covers_are_valid(n):
    assert uncovered_types(upper_bound_plan(n)) == []


@pytest.mark.parametrize("n", [24, 30, 36, 42, 48, 54, 60])
def test_H_covers(n):
    assert uncovered_types(build_H(n)) == []


def test_H_18_variant_covers():
    assert uncovered_types(build_H(18, s18_variant=True)) == []


def test_drop_alternating_24():
    bad = [t.short() for t in uncovered_types(build_H(24).without("alternating"))]
    assert "(11,13)" in bad
    # (9,15) is even, fixed-point free, has no sub-sum <= 7 and none equal to 12
    assert bad == ["(9,15)", "(11,13)"]


@pytest.mark.parametrize("drop", ["wr2", "intransitive:1", "intransitive:4", "intransitive:7"])
def test_each_family_needed(drop):
    assert uncovered_types(build_H(24).without(drop))


@pytest.mark.parametrize("n", [12, 18, 24, 30])
def test_kernel_matches_reference(n):
    plans = [build_H(n, s18_variant=(n == 18))] if n % 6 == 0 and n >= 18 else []
    plans.append(upper_bound_plan(n).without("alternating"))
    plans.append(upper_bound_plan(n).without("wr2"))
    for plan in plans:
        assert uncovered_types(plan) == uncovered_types_reference(plan)


def test_sweep_ceiling():
    with pytest.raises(ResourceLimitError):
        uncovered_types(build_H(66))


@pytest.mark.parametrize("n", [24, 30, 36, 42, 48, 54, 60])
def test_partition_identity(n):
    rep = partition_check(n)
    assert rep.passed, rep.first_failure
    d = rep.to_dict()
    assert all(isinstance(x["lhs"], str) for x in d["identities"])


def test_partition_identity_18():
    assert partition_check(18, s18_variant=True).passed
    with pytest.raises(DomainError):
        partition_check(18)


def test_each_family_meets_its_own_class():
    pi = build_Pi(36)
    for f in build_H(36).families:
        prof = intersection_profile(f, pi)
        hit = [w.index for w, x in zip(pi, prof) if x]
        assert hit == [family_index(f)]


def test_s18_special_counts():
    pi2 = [w for w in pi_prime_18() if w.index >= 3]
    assert [w.cycle_type.short() for w in pi2] == ["(3,7,8)", "(4,7^2)", "(5,6,7)"]
    per = lambda k: sum(count_type_in_member(intransitive(18, k), w.cycle_type) for w in pi2)
    assert per(7) == 3181939200
    assert per(5) == 3558297600 == math.factorial(4) * math.factorial(13) // 42
    assert min(per(3), per(4), per(5)) > per(7)


@pytest.mark.parametrize("n", range(2, 201, 2))
def test_full_cycle_accounting(n):
    assert member_count(intransitive(n, n // 2)) * 2 == math.comb(n, n // 2)
    assert math.comb(n, n // 2) // 2 * math.factorial(n // 2 - 1) * math.factorial(n // 2) == math.factorial(n - 1)


@pytest.mark.parametrize("n", [24, 30, 60, 120, 300])
def test_monotone_sanity(n):
    s = sigma_formula(n)
    assert math.comb(n, n // 2) // 2 < s < math.factorial(n) // 2
