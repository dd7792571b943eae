"""Cycle types of permutations in S_n and exact class counting.

A cycle type is stored with its fixed points (length-1 parts) explicit, so the
invariant ``sum(length * mult) == degree`` can always be checked.

>>> t = CycleType.parse("3,7,8", degree=20)
>>> str(t)
'1^2,3,7,8'
>>> class_size(CycleType.parse("6"))
120
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, ResourceLimitError

#: p(60) = 966467 partitions; above this the type-level sweeps get impractical.
DEFAULT_PARTITION_CEILING = 60


@dataclass(frozen=True, order=True)
class CycleType:
    degree: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.degree < 1:
            raise DomainError(f"degree must be positive, got {self.degree}")
        prev = 0
        total = 0
        for length, mult in self.parts:
            if length <= prev:
                raise DomainError(f"cycle lengths must be strictly increasing: {self.parts}")
            if mult < 1:
                raise DomainError(f"multiplicities must be positive: {self.parts}")
            prev = length
            total += length * mult
        if total != self.degree:
            raise DomainError(f"parts {self.parts} sum to {total}, not degree {self.degree}")

    @classmethod
    def from_lengths(cls, lengths: Iterable[int], degree: int | None = None) -> CycleType:
        """Build from a multiset of cycle lengths; missing fixed points are added."""
        counts = Counter(int(x) for x in lengths)
        if any(x < 1 for x in counts):
            raise DomainError(f"cycle lengths must be positive: {sorted(counts)}")
        total = sum(k * v for k, v in counts.items())
        if degree is None:
            degree = total
        if total > degree:
            raise DomainError(f"cycle lengths sum to {total} > degree {degree}")
        if total < degree:
            counts[1] += degree - total
        return cls(degree, tuple(sorted(counts.items())))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> CycleType:
        """Parse ``len^mult`` tokens, e.g. ``"1^2,3,7,8"`` or ``"(3,7,8)"``."""
        body = text.strip().strip("()").strip()
        lengths: list[int] = []
        if body:
            for token in body.split(","):
                token = token.strip()
                if not token:
                    raise DomainError(f"empty token in cycle type {text!r}")
                length, _, mult = token.partition("^")
                try:
                    length_i = int(length)
                    mult_i = int(mult) if mult else 1
                except ValueError:
                    raise DomainError(f"bad cycle type token {token!r}") from None
                if mult_i < 1:
                    raise DomainError(f"bad multiplicity in {token!r}")
                lengths.extend([length_i] * mult_i)
        if not lengths and degree is None:
            raise DomainError("empty cycle type needs an explicit degree")
        return cls.from_lengths(lengths, degree)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(length for length, mult in self.parts for _ in range(mult))

    @property
    def non_fixed(self) -> tuple[int, ...]:
        return tuple(x for x in self.lengths if x > 1)

    def multiplicity(self, length: int) -> int:
        for ell, mult in self.parts:
            if ell == length:
                return mult
        return 0

    def __str__(self) -> str:
        return ",".join(str(ell) if m == 1 else f"{ell}^{m}" for ell, m in self.parts)

    def short(self) -> str:
        """Fixed-point-suppressed notation, ``(1)`` for the identity."""
        tokens = [str(ell) if m == 1 else f"{ell}^{m}" for ell, m in self.parts if ell > 1]
        return "(" + (",".join(tokens) or "1") + ")"


def centralizer_order(t: CycleType) -> int:
    out = 1
    for length, mult in t.parts:
        out *= length**mult * math.factorial(mult)
    return out


def class_size(t: CycleType) -> int:
    """Number of permutations of S_n with cycle type ``t``."""
    return math.factorial(t.degree) // centralizer_order(t)


def is_even(t: CycleType) -> bool:
    return sum((length - 1) * mult for length, mult in t.parts) % 2 == 0


def parity(t: CycleType) -> str:
    return "even" if is_even(t) else "odd"


def subset_sum_mask(t: CycleType) -> int:
    """Bitmask whose bit ``s`` is set iff some sub-multiset of cycles has total length ``s``."""
    mask = 1
    for length, mult in t.parts:
        for _ in range(mult):
            mask |= mask << length
    return mask


@dataclass(frozen=True)
class TypePredicates:
    has_fixed_point: bool
    is_full_cycle: bool
    min_non_fixed_length: int | None
    all_even: bool
    subset_sums: frozenset[int]


def predicates(t: CycleType) -> TypePredicates:
    mask = subset_sum_mask(t)
    sums = frozenset(s for s in range(t.degree + 1) if mask >> s & 1)
    nf = t.non_fixed
    return TypePredicates(
        has_fixed_point=t.multiplicity(1) > 0,
        is_full_cycle=t.parts == ((t.degree, 1),),
        min_non_fixed_length=min(nf) if nf else None,
        all_even=all(length % 2 == 0 for length, _ in t.parts),
        subset_sums=sums,
    )


def iter_partitions(n: int) -> Iterator[list[int]]:
    """Ascending partitions of ``n`` in lexicographic order (Kelleher's accel_asc)."""
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        ell = k + 1
        while x <= y:
            a[k] = x
            a[ell] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


def all_types(n: int, ceiling: int = DEFAULT_PARTITION_CEILING) -> Iterator[CycleType]:
    """Every cycle type of degree ``n`` exactly once, lexicographic on ascending lengths."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > ceiling:
        raise ResourceLimitError(f"partition enumeration for n={n} exceeds ceiling {ceiling}")
    for lengths in iter_partitions(n):
        yield CycleType.from_lengths(lengths, n)


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def cycle_type_of(images) -> CycleType:
    """Cycle type of a permutation given in image form (``images[i]`` is the image of ``i``)."""
    n = len(images)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = int(images[j])
            length += 1
        if j != start:
            raise DomainError(f"not a permutation: {list(images)}")
        lengths.append(length)
    return CycleType.from_lengths(lengths, n)
