"""Exact checks of the counting inequalities behind sigma(S_n) for n divisible by 6.

Each ``verify_*`` function returns a :class:`LemmaReport` listing exact
quantities and the comparisons made between them. A report passes iff every
comparison holds exactly as written; ties count as failures for strict ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .cycletype import CycleType, class_size
from .errors import DomainError, SnCoverError
from .families import (
    contains_type,
    count_type_in_member,
    imprimitive_families,
    intransitive,
    member_count,
    member_order,
    order_bound_primitive,
    wr2,
)
from .witness import (
    build_H,
    build_Pi,
    intersection_profile,
    partition_check,
    pi_prime_18,
    sigma_18,
    sigma_formula,
    uncovered_types,
)

fact = lru_cache(maxsize=None)(math.factorial)

#: Rational bracket for e, used to check the chain through (n/2)^(n-1)/e^n soundly.
E_LOW = Fraction(27182, 10000)
E_HIGH = Fraction(27183, 10000)

#: |PGL(2,23)|, the primitive maximal subgroup of S_24 not covered by the 2^n bound.
PGL2_23_ORDER = 23 * 24 * 22

S18_PRINTED_LOWER = 3358297600

_OPS: dict[str, Callable[[Fraction, Fraction], bool]] = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


@dataclass
class Check:
    name: str
    lhs: Fraction
    relation: str
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return _OPS[self.relation](Fraction(self.lhs), Fraction(self.rhs))

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": _fmt(self.lhs), "relation": self.relation, "rhs": _fmt(self.rhs), "pass": self.passed}


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class LemmaReport:
    lemma_id: str
    n: int
    quantities: list[tuple[str, Fraction]] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    witnesses: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failed_checks(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def quantity(self, name: str) -> Fraction:
        for k, v in self.quantities:
            if k == name:
                return v
        raise KeyError(name)

    def add(self, name: str, value) -> Fraction:
        value = Fraction(value)
        self.quantities.append((name, value))
        return value

    def check(self, name: str, lhs, relation: str, rhs) -> bool:
        c = Check(name, Fraction(lhs), relation, Fraction(rhs))
        self.checks.append(c)
        return c.passed

    def to_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "n": self.n,
            "verdict": self.verdict,
            "quantities": [
                {"name": k, "num": str(Fraction(v).numerator), "den": str(Fraction(v).denominator)}
                for k, v in self.quantities
            ],
            "checks": [c.to_dict() for c in self.checks],
            "witnesses": list(self.witnesses),
            "notes": list(self.notes),
            "error": self.error,
        }


def _require_mod6(n: int, minimum: int, strict: bool = False) -> None:
    ok = n % 6 == 0 and (n > minimum if strict else n >= minimum)
    if not ok:
        bound = f"n > {minimum}" if strict else f"n >= {minimum}"
        raise DomainError(f"need n divisible by 6 and {bound}, got n={n}")


# ------------------------------------------------------------------ cached counts


@lru_cache(maxsize=None)
def _pi(n: int):
    return tuple(build_Pi(n))


@lru_cache(maxsize=None)
def _profile_intransitive(n: int, k: int) -> tuple[int, ...]:
    return tuple(intersection_profile(intransitive(n, k), list(_pi(n))))


def _meet_pi_intransitive(n: int, k: int) -> int:
    return sum(_profile_intransitive(n, k))


def _pi_index(n: int, i: int) -> int:
    return i + 1  # classes are stored for i = -1, 0, 1, ...


@lru_cache(maxsize=None)
def h_intersections(n: int) -> tuple[tuple[str, int], ...]:
    """|H cap Pi| for one member of each family of H."""
    pi = list(_pi(n))
    return tuple((f.spec, sum(intersection_profile(f, pi))) for f in build_H(n).families)


def _min_h(n: int) -> tuple[str, int]:
    return min(h_intersections(n), key=lambda kv: (kv[1], kv[0]))


def _wr2_pi_bound(n: int) -> int:
    """(n/2)!^2 * 2/n, which equals (n/2 - 1)! (n/2)!."""
    return fact(n // 2 - 1) * fact(n // 2)


def _max_imprimitive(n: int):
    fams = [f for f in imprimitive_families(n) if f.spec != "wr2"]
    if not fams:
        return None, 0
    best = max(fams, key=lambda f: (member_order(f), f.spec))
    return best, member_order(best)


# ---------------------------------------------------------------------- lemmas


def verify_hbound(n: int) -> LemmaReport:
    """Every member H of H meets Pi in at least (n/2 - 1)! (n/2)! elements."""
    _require_mod6(n, 24)
    r = LemmaReport("hbound", n)
    h, t = n // 2, n // 3
    bound = r.add("(n/2-1)!(n/2)!", _wr2_pi_bound(n))
    alt_closed = Fraction(fact(n), (h - 1) * (h + 1)) if h % 2 == 0 else Fraction(fact(n), (h - 2) * (h + 2))
    third = r.add("(n/3-2)! C(2n/3+1,n/3) (n/3-1)! (n/3)!", fact(t - 2) * math.comb(2 * t + 1, t) * fact(t - 1) * fact(t))
    pi = list(_pi(n))
    for spec, value in h_intersections(n):
        r.add(f"|{spec} cap Pi|", value)
        r.check(f"|{spec} cap Pi| >= (n/2-1)!(n/2)!", value, ">=", bound)
        if spec == "alternating":
            r.check("|A_n cap Pi| closed form", value, "==", alt_closed)
        elif spec == "wr2":
            r.check("|wr2 cap Pi| = (n/2-1)!(n/2)!", value, "==", bound)
        else:
            i = int(spec.split(":")[1])
            w = pi[_pi_index(n, i)]
            _, r_len, s_len = w.cycle_type.lengths
            closed = fact(i - 1) * math.comb(n - i, r_len) * fact(r_len - 1) * fact(s_len - 1)
            if r_len == s_len:
                closed = Fraction(closed, 2)
            r.check(f"|{spec} cap Pi| closed form", value, "==", closed)
            r.check(f"|{spec} cap Pi| >= (n/3-2)! C(2n/3+1,n/3) (n/3-1)! (n/3)!", value, ">=", third)
    spec, value = _min_h(n)
    r.witnesses.append(spec)
    r.add("min_H |H cap Pi|", value)
    if value < bound:
        r.notes.append(f"minimum over H is {spec}, below (n/2-1)!(n/2)! by a factor {_fmt(Fraction(bound, value))}")
    return r


def verify_prim(n: int) -> LemmaReport:
    """Primitive M other than A_n: |M cap Pi| < |M| < 2^n < ... <= |H cap Pi|."""
    _require_mod6(n, 24, strict=True)
    r = LemmaReport("prim", n)
    two_n = r.add("2^n", order_bound_primitive(n))
    mid = r.add("(n/2)!^2 * 2/n", Fraction(fact(n // 2) ** 2 * 2, n))
    spec, min_h = _min_h(n)
    r.add("min_H |H cap Pi|", min_h)
    r.witnesses.append(spec)
    base = Fraction(n, 2) ** (n - 1)
    r.check("2^n < (n/2)^(n-1)/e^n  [e <= 2.7183]", two_n, "<", base / E_HIGH**n)
    r.check("(n/2)^(n-1)/e^n <= (n/2)!^2 * 2/n  [e >= 2.7182]", base / E_LOW**n, "<=", mid)
    r.check("2^n < (n/2)!^2 * 2/n", two_n, "<", mid)
    r.check("(n/2)!^2 * 2/n <= min_H |H cap Pi|", mid, "<=", min_h)
    r.check("conclusion: 2^n < min_H |H cap Pi|", two_n, "<", min_h)
    return r


def verify_imprim(n: int) -> LemmaReport:
    """Imprimitive M outside H: |M| <= (n/3)!^3 3! < (n/2)!^2 2/n <= |H cap Pi|."""
    _require_mod6(n, 24)
    r = LemmaReport("imprim", n)
    fam, order = _max_imprimitive(n)
    r.witnesses.append(fam.spec)
    for f in imprimitive_families(n):
        if f.spec != "wr2":
            r.add(f"|{f.spec}|", member_order(f))
    cap = r.add("(n/3)!^3 * 3!", fact(n // 3) ** 3 * 6)
    mid = r.add("(n/2)!^2 * 2/n", Fraction(fact(n // 2) ** 2 * 2, n))
    spec, min_h = _min_h(n)
    r.add("min_H |H cap Pi|", min_h)
    r.check(f"max imprimitive order ({fam.spec}) <= (n/3)!^3 * 3!", order, "<=", cap)
    r.check("(n/3)!^3 * 3! < (n/2)!^2 * 2/n", cap, "<", mid)
    r.check("(n/2)!^2 * 2/n <= min_H |H cap Pi|", mid, "<=", min_h)
    r.check("conclusion: max imprimitive order < min_H |H cap Pi|", order, "<", min_h)
    return r


def verify_forced_wr2_and_alt(n: int) -> LemmaReport:
    """Every minimal cover contains all of wr2 and A_n (exchange counts)."""
    _require_mod6(n, 24)
    r = LemmaReport("forced", n)
    h = n // 2
    per_wr2 = r.add("(n/2)!(n/2-1)!", fact(h) * fact(h - 1))
    six = r.add("6 * (n/3)!^3", 6 * fact(n // 3) ** 3)
    _, imp = _max_imprimitive(n)
    r.check("max imprimitive order (non-wr2) <= 6 (n/3)!^3", imp, "<=", six)
    r.check("6 (n/3)!^3 < (n/2)!(n/2-1)!", six, "<", per_wr2)
    if n > 24:
        r.check("2^n < (n/2)!(n/2-1)!", order_bound_primitive(n), "<", per_wr2)
    else:
        r.check("|PGL(2,23)| < (n/2)!(n/2-1)!", PGL2_23_ORDER, "<", per_wr2)
        r.notes.append("n = 24: the 2^n bound is not available; PGL(2,23) is the primitive maximal subgroup used instead")
    pi0 = _pi(n)[_pi_index(n, 0)]
    r.add("|Pi_0|", pi0.size)
    cap = r.add("(n/2)!(n/2-2)!", fact(h) * fact(h - 2))
    best_k, best = 0, -1
    for k in range(1, h + 1):
        v = count_type_in_member(intransitive(n, k), pi0.cycle_type)
        if v > best:
            best_k, best = k, v
    r.witnesses.append(f"intransitive:{best_k}")
    r.add("max_k |S_k x S_{n-k} cap Pi_0|", best)
    r.check("no intransitive member holds more than (n/2)!(n/2-2)! of Pi_0", best, "<=", cap)
    r.check("|wr2 cap Pi_0| = 0", count_type_in_member(wr2(n), pi0.cycle_type), "==", 0)
    r.check("transitive non-A_n members hold fewer than (n/2)!(n/2-2)!", max(six, 2**n if n > 24 else PGL2_23_ORDER), "<", cap)
    needed = r.add("ceil(|Pi_0| / ((n/2)!(n/2-2)!))", -((-pi0.size) // (fact(h) * fact(h - 2))))
    r.check("replacements for A_n >= C(n, n/2-1)", needed, ">=", math.comb(n, h - 1))
    upper = r.add("sigma upper bound", sigma_formula(n))
    r.check("(1/2) C(n,n/2) + C(n,n/2-1) > sigma upper bound", math.comb(n, h) // 2 + math.comb(n, h - 1), ">", upper)
    # the same argument with the true per-member maximum
    actual = r.add("ceil(|Pi_0| / max_k |S_k x S_{n-k} cap Pi_0|)", -((-pi0.size) // best))
    r.check("conclusion: (1/2) C(n,n/2) + actual replacements > sigma upper bound",
            math.comb(n, h) // 2 + actual, ">", upper)
    return r


def verify_profile_width(n: int) -> LemmaReport:
    """How many witness classes Pi_i each S_k x S_{n-k} (n/3 <= k <= n/2) meets."""
    _require_mod6(n, 24)
    r = LemmaReport("width", n)
    h = n // 2
    pi = _pi(n)
    for k in range(-(-n // 3), h + 1):
        prof = _profile_intransitive(n, k)
        nz = [w.index for w, x in zip(pi, prof) if x]
        r.notes.append(f"intransitive:{k} meets Pi_i for i in {nz}")
        r.check(f"intransitive:{k} misses Pi_-1", int(-1 in nz), "==", 0)
        if h % 2 == 1 and k == h - 2:
            r.witnesses.append(f"intransitive:{k}")
            r.check(f"intransitive:{k} meets exactly six classes", len(nz), "==", 6)
            r.check(f"intransitive:{k} meets Pi_i for 1 <= i <= 6 among i >= 1",
                    int([i for i in nz if i >= 1] == [1, 2, 3, 4, 5, 6]), "==", 1)
        elif h % 2 == 0 and k == h - 1:
            r.witnesses.append(f"intransitive:{k}")
            r.check(f"intransitive:{k} meets exactly Pi_0..Pi_4", int(nz == [0, 1, 2, 3, 4]), "==", 1)
        else:
            r.check(f"intransitive:{k} meets at most five classes", len(nz), "<=", 5)
    return r


def verify_almostall(n: int) -> LemmaReport:
    """Only S_{n/3+1} x S_{2n/3-1} can beat a member of H on Pi."""
    _require_mod6(n, 30, strict=True)
    r = LemmaReport("almostall", n)
    t = n // 3
    h_vals = {i: _meet_pi_intransitive(n, i) for i in range(1, t)}
    argmin = min(h_vals, key=lambda i: (h_vals[i], i))
    comparator = r.add("min over intransitive H of |H cap Pi|", h_vals[argmin])
    r.witnesses.append(f"intransitive:{argmin}")
    r.check("minimizing H is S_{n/3-1} x S_{2n/3+1}", argmin, "==", t - 1)
    m_vals = {k: _meet_pi_intransitive(n, k) for k in range(t, n // 2 + 1)}
    for k, v in m_vals.items():
        r.add(f"|intransitive:{k} cap Pi|", v)
    exceptions = [k for k, v in m_vals.items() if v >= comparator]
    r.notes.append(f"exception set: {['intransitive:%d' % k for k in exceptions]}")
    r.check("exception set is exactly {S_{n/3+1} x S_{2n/3-1}}", int(exceptions == [t + 1]), "==", 1)
    r.check("|H_{n/3-1} cap Pi| < |S_{n/3+1} x S_{2n/3-1} cap Pi|", h_vals[t - 1], "<", m_vals[t + 1])
    for i in range(1, t - 1):
        r.check(f"|H_{i} cap Pi| > |S_(n/3+1) x S_(2n/3-1) cap Pi|", h_vals[i], ">", m_vals[t + 1])
    # the two displayed chains
    a1 = fact(t - 1) * math.comb(2 * t, t - 1) * fact(t - 2) * fact(t)
    a2 = Fraction(fact(t - 1) * fact(2 * t), (t - 1) * (t + 1))
    b1 = Fraction(fact(t - 2) * fact(2 * t + 1), t * (t + 1))
    b2 = fact(t - 2) * math.comb(2 * t + 1, t) * fact(t - 1) * fact(t)
    r.check("chain 1: first line = second line", a1, "==", a2)
    r.check("chain 1: closed form = |S_{n/3} x S_{2n/3} cap Pi|", a2, "==", m_vals[t])
    r.check("chain 1: strict step", a2, "<", b1)
    r.check("chain 1: closing lines agree", b1, "==", b2)
    r.check("chain 1: closed form = |H_{n/3-1} cap Pi|", b2, "==", h_vals[t - 1])
    c1 = (fact(t + 1) * math.comb(2 * t - 2, t - 3) * fact(t - 4) * fact(t)
          + fact(t + 1) * math.comb(2 * t - 2, t - 5) * fact(t - 6) * fact(t + 2))
    c2 = (Fraction(fact(t + 1) * fact(2 * t - 2), (t - 3) * (t + 1))
          + Fraction(fact(t + 1) * fact(2 * t - 2), (t - 5) * (t + 3)))
    r.check("chain 2: first line = second line", c1, "==", c2)
    r.check("chain 2: closed form = |S_{n/3+2} x S_{2n/3-2} cap Pi|", c2, "==", m_vals[t + 2])
    r.check("chain 2: strict step", c2, "<", b1)
    return r


def exchange_terms(n: int) -> dict[str, Fraction]:
    t = n // 3
    return {
        "T1": Fraction(fact(t - 2) * fact(2 * t + 1), t * (t + 1)),
        "T2": Fraction(fact(t - 3) * fact(2 * t + 2), 2 * (t + 1) * (t + 1)),
        "T3": Fraction(fact(t - 4) * fact(2 * t + 3), (t + 2) * (t + 1)),
        "T4": Fraction(fact(t - 5) * fact(2 * t + 4), (t + 1) * (t + 3)),
        "capacity": fact(t) * fact(2 * t - 1) * (
            Fraction(1, t * (t - 1)) + Fraction(1, (t + 1) * (t - 2))
            + Fraction(1, (t + 2) * (t - 3)) + Fraction(1, (t + 3) * (t - 4))
        ),
        "a": Fraction(t + 1, 4 * t + 2),
        "b": Fraction(n + 1, 4 * t + 2),
        "ratio": Fraction(4 * t + 2, t + 1),
    }


def verify_exchange(n: int, variant: bool = False) -> LemmaReport:
    """The final counting step: swapping in S_{n/3+1} x S_{2n/3-1} never helps.

    ``variant`` (n = 30) adds the preliminary S_2 x S_28 count and allows
    |C'| <= c instead of c - 1, which leaves the decisive inequality unchanged.
    """
    if variant:
        if n != 30:
            raise DomainError("the exchange variant applies to n = 30 only")
    else:
        _require_mod6(n, 30, strict=True)
    r = LemmaReport("exchange", n)
    t = n // 3
    T = exchange_terms(n)
    for key in ("T1", "T2", "T3", "T4", "capacity"):
        r.add(key, T[key])
    for j in range(1, 5):
        r.check(f"T{j} = |H_(n/3-{j}) cap Pi|", T[f"T{j}"], "==", _meet_pi_intransitive(n, t - j))
    prof = _profile_intransitive(n, t + 1)
    four = sum(prof[_pi_index(n, t - j)] for j in range(1, 5))
    r.check("capacity = |M cap (Pi_{n/3-1..n/3-4})|", T["capacity"], "==", four)
    if n > 30:
        r.check("M meets no other witness class", sum(prof), "==", four)
    else:
        others = {w.index: x for w, x in zip(_pi(n), prof) if x and w.index not in range(t - 4, t)}
        r.notes.append(f"n = 30: M also meets {sorted(others)} (the (2,11,17) elements), handled by the preliminary count")
        r.check("n = 30: the only extra class M meets is Pi_2", int(sorted(others) == [2]), "==", 1)
    m_on_top = prof[_pi_index(n, t - 1)]
    r.check("coverage ratio |H_{n/3-1} cap Pi| / |M cap Pi_{n/3-1}| = (4n/3+2)/(n/3+1)",
            Fraction(T["T1"]) / m_on_top, "==", T["ratio"])
    top = _pi(n)[_pi_index(n, t - 1)]
    r.check("Pi_{n/3-1} partitioned by H_{n/3-1}", math.comb(n, t - 1) * T["T1"], "==", top.size)
    r.check("Pi_{n/3-1} partitioned by S_{n/3+1} x S_{2n/3-1}", math.comb(n, t + 1) * m_on_top, "==", top.size)
    r.check("T3 + T4 > 2 T2 (demand bound)", T["T3"] + T["T4"], ">", 2 * T["T2"])
    rhs = r.add("a*T1 + b*T2", T["a"] * T["T1"] + T["b"] * T["T2"])
    r.check("per-M capacity < a*T1 + b*T2", T["capacity"], "<", rhs)
    if variant:
        shared = 2 * math.comb(28, 11) - math.comb(27, 11)
        disjoint = 2 * math.comb(28, 11) - math.comb(26, 11)
        needed = r.add("2 C(28,17) - C(27,16)", 2 * math.comb(28, 17) - math.comb(27, 16))
        r.check("2 C(28,17) - C(27,16) = 29910465", needed, "==", 29910465)
        r.check("worst case over two S_2 x S_28 removals", min(shared, disjoint), "==", needed)
        avail = r.add("C(30,2) + C(30,6..9)", sum(math.comb(30, i) for i in (2, 6, 7, 8, 9)))
        r.check("C(30,2) + C(30,6) + ... + C(30,9) = 22790085", avail, "==", 22790085)
        r.check("29910465 > 22790085", needed, ">", avail)
    return r


def verify_s18() -> LemmaReport:
    """Special counts for n = 18."""
    r = LemmaReport("s18", 18)
    pi = pi_prime_18()
    pi2 = [w for w in pi if w.index >= 3]
    c7 = r.add("|S_7 x S_11 cap Pi''|", sum(count_type_in_member(intransitive(18, 7), w.cycle_type) for w in pi2))
    r.check("|S_7 x S_11 cap Pi''| = 3181939200", c7, "==", 3181939200)
    vals = {}
    for k in (3, 4, 5):
        vals[k] = r.add(f"|S_{k} x S_{18 - k} cap Pi''|", sum(count_type_in_member(intransitive(18, k), w.cycle_type) for w in pi2))
    low = min(vals.values())
    kmin = min(vals, key=lambda k: (vals[k], k))
    r.witnesses.append(f"intransitive:{kmin}")
    r.add("printed lower bound", S18_PRINTED_LOWER)
    r.check("min over S_3, S_4, S_5 classes > 3181939200", low, ">", c7)
    r.check("min over S_3, S_4, S_5 classes >= printed 3358297600", low, ">=", S18_PRINTED_LOWER)
    if low != S18_PRINTED_LOWER:
        r.notes.append(f"computed minimum {low} ({'S_%d x S_%d' % (kmin, 18 - kmin)}) differs from the printed 3358297600")
    r.check("C(18,7) = 31824", math.comb(18, 7), "==", 31824)
    r.check("C(17,7) = 19448", math.comb(17, 7), "==", 19448)
    r.check("member_count(S_7 x S_11) = 31824", member_count(intransitive(18, 7)), "==", 31824)
    t711 = next(w for w in pi if w.index == 0)
    r.check("every (7,11) element lies in exactly one S_7 x S_11",
            31824 * count_type_in_member(intransitive(18, 7), t711.cycle_type), "==", t711.size)
    s = sigma_18()
    r.add("cover size", s.cover_enumeration)
    r.add("formula sum", s.formula_sum)
    r.add("stated sigma(S_18)", s.stated)
    r.check("formula sum = cover enumeration", s.formula_sum, "==", s.cover_enumeration)
    r.check("dropping A_18 costs more: C(18,9)/2 + 31824 > cover size", math.comb(18, 9) // 2 + 31824, ">", s.cover_enumeration)
    r.check("dropping an S_17 costs more: C(18,9)/2 + 19448 > cover size", math.comb(18, 9) // 2 + 19448, ">", s.cover_enumeration)
    r.check("S_2 x S_16 meets no Pi' class", sum(intersection_profile(intransitive(18, 2), pi)), "==", 0)
    smallest_c = min(sum(intersection_profile(f, pi)) for f in build_H(18, s18_variant=True).families)
    r.check("S_8 x S_10 meets Pi' less than any member of the cover",
            sum(intersection_profile(intransitive(18, 8), pi)), "<", smallest_c)
    for lengths in ((2, 6, 10), (2, 7, 9), (2, 8, 8), (6, 6, 6)):
        t = CycleType.from_lengths(lengths, 18)
        r.check(f"{t.short()} lies in S_9 wr S_2", int(contains_type(wr2(18), t)), "==", 1)
    if not s.matches_stated:
        r.notes.append(f"stated sigma(S_18) = {s.stated} but the formula and the cover both give {s.formula_sum}")
    return r


def verify_partition(n: int) -> LemmaReport:
    r = LemmaReport("partition", n)
    rep = partition_check(n, s18_variant=(n == 18))
    for ident in rep.identities:
        r.check(ident.name, int(ident.lhs), "==", int(ident.rhs))
    return r


def verify_cover(n: int) -> LemmaReport:
    r = LemmaReport("cover", n)
    plan = build_H(n, s18_variant=(n == 18))
    bad = uncovered_types(plan)
    r.add("cover size", plan.size)
    r.check("uncovered cycle types", len(bad), "==", 0)
    r.notes.extend(f"uncovered: {t}" for t in bad[:10])
    return r


LEMMAS = ("hbound", "prim", "imprim", "forced", "width", "almostall", "exchange", "partition", "cover", "s18")

_RUNNERS: dict[str, Callable[[int], LemmaReport]] = {
    "hbound": verify_hbound,
    "prim": verify_prim,
    "imprim": verify_imprim,
    "forced": verify_forced_wr2_and_alt,
    "width": verify_profile_width,
    "almostall": verify_almostall,
    "exchange": lambda n: verify_exchange(n, variant=(n == 30)),
    "partition": verify_partition,
    "cover": verify_cover,
    "s18": lambda n: verify_s18(),
}


def applicable(lemma: str, n: int, cover_ceiling: int = 60) -> bool:
    if n == 18:
        return lemma in ("s18", "partition", "cover")
    if n % 6 or n < 24 or lemma == "s18":
        return False
    if lemma == "prim":
        return n > 24
    if lemma == "almostall":
        return n > 30
    if lemma == "exchange":
        return n >= 30
    if lemma == "cover":
        return n <= cover_ceiling
    return True


def run_lemma(lemma: str, n: int) -> LemmaReport:
    if lemma not in _RUNNERS:
        raise DomainError(f"unknown lemma {lemma!r}; choose from {LEMMAS}")
    try:
        return _RUNNERS[lemma](n)
    except SnCoverError as exc:
        return LemmaReport(lemma, n, error=f"{type(exc).__name__}: {exc}")


def run_all(ns: Iterable[int], lemmas: Iterable[str] | None = None, cover_ceiling: int = 60) -> list[LemmaReport]:
    """Run every applicable check for each n; errors are collected per item.

    Reports come back ordered by (n, lemma order in :data:`LEMMAS`).
    """
    wanted = list(LEMMAS) if lemmas is None else list(lemmas)
    for lem in wanted:
        if lem not in _RUNNERS:
            raise DomainError(f"unknown lemma {lem!r}; choose from {LEMMAS}")
    out = []
    for n in sorted(set(ns)):
        for lem in LEMMAS:
            if lem in wanted and applicable(lem, n, cover_ceiling):
                out.append(run_lemma(lem, n))
    return out
