"""Conjugacy classes of maximal subgroups of S_n, modeled symbolically.

Each :class:`SubgroupFamily` stands for a whole conjugacy class. The counting
functions work on one fixed member: the stabilizer of ``{0..k-1}`` for
intransitive families, the stabilizer of the halving ``{0..n/2-1} | {n/2..n-1}``
for ``wr2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .cycletype import CycleType, class_size, is_even, subset_sum_mask
from .errors import DomainError, UnsupportedFamilyError

INTRANSITIVE = "intransitive"
WR2 = "wr2"
IMPRIMITIVE = "imprimitive"
ALTERNATING = "alternating"
PRIMITIVE = "primitive"

KINDS = (INTRANSITIVE, WR2, IMPRIMITIVE, ALTERNATING, PRIMITIVE)


@dataclass(frozen=True, order=True)
class SubgroupFamily:
    """A conjugacy class of (maximal) subgroups of S_degree.

    ``k`` is the smaller orbit size for intransitive families and the block size
    for imprimitive ones; ``blocks`` is the number of blocks.
    """

    kind: str
    degree: int
    k: int = 0
    blocks: int = 0

    def __post_init__(self):
        n = self.degree
        if self.kind not in KINDS:
            raise DomainError(f"unknown family kind {self.kind!r}")
        if n < 2:
            raise DomainError(f"degree must be at least 2, got {n}")
        if self.kind == INTRANSITIVE and not 1 <= self.k <= n // 2:
            raise DomainError(f"intransitive:{self.k} needs 1 <= k <= n/2 at n={n}")
        if self.kind == WR2 and n % 2:
            raise DomainError(f"wr2 needs even degree, got {n}")
        if self.kind == IMPRIMITIVE:
            if self.k < 2 or self.blocks < 2 or self.k * self.blocks != n:
                raise DomainError(f"imprimitive:{self.k}x{self.blocks} invalid at n={n}")
            if self.blocks == 2:
                raise DomainError("use the wr2 family for two blocks")

    @property
    def spec(self) -> str:
        if self.kind == INTRANSITIVE:
            return f"intransitive:{self.k}"
        if self.kind == IMPRIMITIVE:
            return f"imprimitive:{self.k}x{self.blocks}"
        return self.kind

    def __str__(self):
        return self.spec


def intransitive(n: int, k: int) -> SubgroupFamily:
    if 0 < k < n and k > n - k:
        k = n - k
    return SubgroupFamily(INTRANSITIVE, n, k)


def wr2(n: int) -> SubgroupFamily:
    return SubgroupFamily(WR2, n, n // 2, 2)


def imprimitive(n: int, k: int, blocks: int) -> SubgroupFamily:
    """S_k wr S_blocks; the two-block case collapses to :func:`wr2`."""
    if blocks == 2 and 2 * k == n:
        return wr2(n)
    return SubgroupFamily(IMPRIMITIVE, n, k, blocks)


def alternating(n: int) -> SubgroupFamily:
    return SubgroupFamily(ALTERNATING, n)


def primitive(n: int) -> SubgroupFamily:
    return SubgroupFamily(PRIMITIVE, n)


def parse_family(spec: str, n: int) -> SubgroupFamily:
    """Parse ``intransitive:7``, ``wr2``, ``imprimitive:4x3``, ``alternating``, ``primitive``."""
    kind, _, arg = spec.strip().lower().partition(":")
    try:
        if kind == INTRANSITIVE:
            return intransitive(n, int(arg))
        if kind == IMPRIMITIVE:
            k, _, b = arg.partition("x")
            return imprimitive(n, int(k), int(b))
    except ValueError:
        raise DomainError(f"bad family spec {spec!r}") from None
    if arg:
        raise DomainError(f"family {kind!r} takes no argument: {spec!r}")
    if kind == WR2:
        return wr2(n)
    if kind in ("alternating", "alt", "a"):
        return alternating(n)
    if kind == PRIMITIVE:
        return primitive(n)
    raise DomainError(f"unknown family spec {spec!r}")


def imprimitive_families(n: int) -> list[SubgroupFamily]:
    """All imprimitive classes S_k wr S_l with k*l = n, k, l > 1 (wr2 included)."""
    out = []
    for k in range(2, n // 2 + 1):
        if n % k == 0:
            out.append(imprimitive(n, k, n // k))
    return out


def member_count(f: SubgroupFamily) -> int:
    """Number of subgroups in the conjugacy class."""
    n = f.degree
    if f.kind == INTRANSITIVE:
        c = math.comb(n, f.k)
        return c // 2 if 2 * f.k == n else c
    if f.kind == WR2:
        return math.comb(n, n // 2) // 2
    if f.kind == IMPRIMITIVE:
        return math.factorial(n) // (math.factorial(f.k) ** f.blocks * math.factorial(f.blocks))
    if f.kind == ALTERNATING:
        return 1
    raise UnsupportedFamilyError("member count of primitive families is not modeled")


def member_order(f: SubgroupFamily) -> int:
    n = f.degree
    if f.kind == INTRANSITIVE:
        return math.factorial(f.k) * math.factorial(n - f.k)
    if f.kind in (WR2, IMPRIMITIVE):
        return math.factorial(f.k) ** f.blocks * math.factorial(f.blocks)
    if f.kind == ALTERNATING:
        return math.factorial(n) // 2
    raise UnsupportedFamilyError("use order_bound_primitive for primitive families")


def order_bound_primitive(n: int) -> int:
    """Strict upper bound 2^n on primitive subgroups other than A_n; only licensed for n > 24."""
    if n <= 24:
        raise DomainError(f"the 2^n primitive order bound needs n > 24, got n={n}")
    return 2**n


def _sub_class_size(parts: list[tuple[int, int]]) -> int:
    m = 0
    cent = 1
    for length, mult in parts:
        if mult:
            m += length * mult
            cent *= length**mult * math.factorial(mult)
    return math.factorial(m) // cent


def splits(t: CycleType, target: int) -> Iterator[tuple[list[tuple[int, int]], list[tuple[int, int]]]]:
    """Ways to send cycles of ``t`` to a side of size ``target`` (multiplicity vectors)."""
    parts = t.parts
    suffix = [0] * (len(parts) + 1)
    for i in range(len(parts) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + parts[i][0] * parts[i][1]
    chosen = [0] * len(parts)

    def rec(i, remaining):
        if remaining == 0:
            left = [(parts[j][0], chosen[j]) for j in range(len(parts)) if chosen[j]]
            right = [(parts[j][0], parts[j][1] - chosen[j]) for j in range(len(parts)) if parts[j][1] - chosen[j]]
            yield left, right
            return
        if i == len(parts) or suffix[i] < remaining:
            return
        length, mult = parts[i]
        for b in range(min(mult, remaining // length), -1, -1):
            chosen[i] = b
            yield from rec(i + 1, remaining - b * length)
        chosen[i] = 0

    yield from rec(0, target)


def _count_preserving_set(t: CycleType, k: int) -> int:
    return sum(_sub_class_size(left) * _sub_class_size(right) for left, right in splits(t, k))


def count_type_in_member(f: SubgroupFamily, t: CycleType) -> int:
    """Exact number of permutations of type ``t`` inside one fixed member of ``f``."""
    if t.degree != f.degree:
        raise DomainError(f"type degree {t.degree} does not match family degree {f.degree}")
    if f.kind == INTRANSITIVE:
        return _count_preserving_set(t, f.k)
    if f.kind == WR2:
        m = f.degree // 2
        fixing = _count_preserving_set(t, m)
        swapping = 0
        if all(length % 2 == 0 for length, _ in t.parts):
            # g swaps the blocks; g^2 restricted to one block has the halved type,
            # and (g|A, g|B) <-> (bijection A->B, permutation of A of halved type)
            halved = [(length // 2, mult) for length, mult in t.parts]
            swapping = math.factorial(m) * _sub_class_size(halved)
        return fixing + swapping
    if f.kind == ALTERNATING:
        return class_size(t) if is_even(t) else 0
    raise UnsupportedFamilyError(f"no exact type counts for {f.spec}; only order bounds are modeled")


def contains_type(f: SubgroupFamily, t: CycleType) -> bool:
    """Whether some member of ``f`` contains permutations of type ``t``."""
    if f.kind == INTRANSITIVE:
        return bool(subset_sum_mask(t) >> f.k & 1)
    if f.kind == WR2:
        return bool(subset_sum_mask(t) >> (f.degree // 2) & 1) or all(
            length % 2 == 0 for length, _ in t.parts
        )
    if f.kind == ALTERNATING:
        return is_even(t)
    raise UnsupportedFamilyError(f"type-level membership not modeled for {f.spec}")
