import math

from hypothesis import given, settings
from hypothesis import strategies as st

from sncover.cycletype import CycleType, class_size, cycle_type_of, is_even, subset_sum_mask
from sncover.families import contains_type, count_type_in_member, intransitive, member_count, wr2


@st.composite
def cycle_types(draw, max_degree=40):
    n = draw(st.integers(1, max_degree))
    lengths, left = [], n
    while left:
        x = draw(st.integers(1, left))
        lengths.append(x)
        left -= x
    return CycleType.from_lengths(lengths, n)


def _invariant_k_sets(t: CycleType, k: int) -> int:
    # coefficient of x^k in prod over cycles of (1 + x^length)
    poly = [1] + [0] * t.degree
    for length in t.lengths:
        for s in range(t.degree, length - 1, -1):
            poly[s] += poly[s - length]
    return poly[k]


@given(cycle_types())
def test_roundtrip(t):
    assert CycleType.parse(str(t), t.degree) == t
    assert CycleType.parse(t.short(), t.degree) == t


@given(st.permutations(list(range(9))))
def test_parity_matches_inversions(p):
    inv = sum(1 for i in range(9) for j in range(i + 1, 9) if p[i] > p[j])
    assert is_even(cycle_type_of(p)) == (inv % 2 == 0)


@given(cycle_types())
def test_class_size_divides(t):
    assert math.factorial(t.degree) % class_size(t) == 0


@given(cycle_types(), st.data())
def test_double_counting_intransitive(t, data):
    if t.degree < 2:
        return
    k = data.draw(st.integers(1, t.degree // 2))
    fam = intransitive(t.degree, k)
    containing = _invariant_k_sets(t, k)
    if 2 * k == t.degree:
        containing //= 2
    assert member_count(fam) * count_type_in_member(fam, t) == class_size(t) * containing
    assert contains_type(fam, t) == bool(subset_sum_mask(t) >> k & 1)


@settings(max_examples=200)
@given(cycle_types())
def test_wr2_counts_are_bounded(t):
    if t.degree % 2 or t.degree < 2:
        return
    c = count_type_in_member(wr2(t.degree), t)
    assert 0 <= c <= class_size(t)
    # every element of the member is counted under exactly one type
    assert (member_count(wr2(t.degree)) * c) % class_size(t) == 0
    halves = bool(subset_sum_mask(t) >> (t.degree // 2) & 1)
    all_even = all(x % 2 == 0 for x in t.lengths)
    assert (c > 0) == (halves or all_even)
