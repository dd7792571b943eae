import math
from collections import Counter

import numpy as np
import pytest

from sncover.cycletype import CycleType
from sncover.errors import CatalogError, DomainError, ResourceLimitError
from sncover.families import count_type_in_member, intransitive, wr2
from sncover.smallgroups import (
    Permutation,
    bucket_by_type,
    closure,
    load_catalog,
    maximal_subgroups,
    named_group,
    uncovered_two_generated,
)
from sncover.smallgroups.groups import imprimitive_member, intransitive_member, parse_catalog, primitive_members


def P(text, n):
    return Permutation.from_cycles(text, n)


def test_permutation_basics():
    p = P("(0 1 2)(3 4)", 5)
    assert p.images == (1, 2, 0, 4, 3)
    assert p.cycle_type() == CycleType.parse("2,3")
    assert not p.is_even()
    assert p * p.inverse() == Permutation.identity(5)
    assert P("()", 3) == Permutation.identity(3)
    for bad in ("(0 1", "(0 0)", "(0 9)", "(a b)"):
        with pytest.raises(DomainError):
            P(bad, 5)
    with pytest.raises(DomainError):
        Permutation((0, 0, 1))


def test_closure_examples():
    assert len(closure([P("(0 1)", 4), P("(0 1 2 3)", 4)])) == 24
    assert len(closure([P("(0 1 2 3 4)", 5)])) == 5
    assert len(closure([P("(0 1 2 3 4)", 5), P("(1 2 4 3)", 5)])) == 20
    with pytest.raises(ResourceLimitError):
        closure([P("(0 1)", 6), P("(0 1 2 3 4 5)", 6)], ceiling=100)


def test_catalog_orders():
    cat = {e.name: e for e in load_catalog()}
    assert {k: v.order for k, v in cat.items()} == {
        "AGL1_5": 20, "PGL2_5": 120, "AGL1_7": 42, "PSL3_2": 168, "PGL2_7": 336, "AGL3_2": 1344,
    }
    for e in cat.values():
        members = primitive_members(e)
        assert all(m.order == e.order for m in members)
        # each of these groups is self-normalizing in S_n
        assert len(members) == math.factorial(e.degree) // e.order


@pytest.mark.parametrize(
    "text,err",
    [
        ("(0 1)\n", "before any group header"),
        ("group X degree 3\n(0 1)\n", "expected"),
        ("group X degree three order 6\n(0 1)\n", "integers"),
        ("group X degree 3 order 6\n", "no generators"),
        ("group X degree 3 order 6\n(0 5)\n", "bad point"),
    ],
)
def test_catalog_parse_errors(text, err):
    with pytest.raises(CatalogError, match=err):
        parse_catalog(text)


def test_catalog_wrong_order():
    (entry,) = parse_catalog("group X degree 5 order 21\n(0 1 2 3 4)\n(1 2 4 3)\n")
    with pytest.raises(CatalogError, match="order 20"):
        primitive_members(entry)


def test_catalog_missing_class(tmp_path):
    path = tmp_path / "cat.txt"
    path.write_text("group AGL1_5 degree 5 order 20\n(0 1 2 3 4)\n(1 2 4 3)\n")
    cat = load_catalog(path)
    assert maximal_subgroups("S5", cat)
    with pytest.raises(CatalogError, match="PGL2_5"):
        maximal_subgroups("S6", cat)


def test_catalog_env(tmp_path, monkeypatch):
    path = tmp_path / "cat.txt"
    path.write_text("group C5 degree 5 order 5\n(0 1 2 3 4)\n")
    monkeypatch.setenv("SNCOVER_CATALOG", str(path))
    assert [e.name for e in load_catalog()] == ["C5"]


def test_named_group():
    assert named_group("A5").order == 60
    assert named_group("S4").order == 24
    for bad in ("S9", "B5", "Sx"):
        with pytest.raises(DomainError):
            named_group(bad)


def _shape(maxes):
    return Counter((m.label.split("#")[0], m.order) for m in maxes)


def test_maximals_S4():
    assert _shape(maximal_subgroups("S4")) == Counter(
        {("alternating", 12): 1, ("intransitive:1", 6): 4, ("wr2", 8): 3}
    )


def test_maximals_A5():
    assert _shape(maximal_subgroups("A5")) == Counter(
        {("intransitive:1", 12): 5, ("primitive:AGL1_5", 10): 6, ("intransitive:2", 6): 10}
    )


def test_maximals_S6_has_six_pgl():
    shape = _shape(maximal_subgroups("S6"))
    assert shape[("primitive:PGL2_5", 120)] == 6
    assert sum(shape.values()) == 53


@pytest.mark.parametrize("name,count", [("S4", 8), ("A5", 21), ("S5", 22), ("S6", 53), ("A6", 52), ("A7", 93), ("S7", 184)])
def test_maximal_counts_and_completeness(name, count):
    g = named_group(name)
    maxes = maximal_subgroups(g)
    assert len(maxes) == count
    assert uncovered_two_generated(g, maxes) == []


def test_completeness_sweep_detects_gap():
    g = named_group("A5")
    maxes = [m for m in maximal_subgroups(g) if not m.label.startswith("primitive")]
    assert uncovered_two_generated(g, maxes)


def test_bucket_examples():
    half = imprimitive_member(6, [(0, 1, 2), (3, 4, 5)])
    b = bucket_by_type(half)
    assert b[CycleType.parse("6")] == 12
    assert b[CycleType.parse("2,4", 6)] == 18
    assert bucket_by_type(intransitive_member(6, (0, 1)))[CycleType.parse("2,4", 6)] == 6


@pytest.mark.parametrize("n", [4, 6, 8])
def test_bucket_matches_formula(n):
    members = [(wr2(n), imprimitive_member(n, [tuple(range(n // 2)), tuple(range(n // 2, n))]))]
    members += [(intransitive(n, k), intransitive_member(n, range(k))) for k in range(1, n // 2 + 1)]
    for fam, member in members:
        for t, c in bucket_by_type(member).items():
            assert count_type_in_member(fam, t) == c


def test_subgroup_issubset():
    a = intransitive_member(5, (0,))
    s = maximal_subgroups("S5")
    assert any(a.issubset(m) for m in s)
    assert not s[0].issubset(a)
    assert isinstance(a.mask(), np.ndarray) and a.mask().sum() == 24
