"""Explicit permutations of small degree and rank-indexed element sets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .. import _kernels as K
from ..cycletype import CycleType, cycle_type_of
from ..errors import DomainError, ResourceLimitError

#: Largest degree for which the full rank table is built.
MAX_TABLE_DEGREE = 10
DEFAULT_CLOSURE_CEILING = math.factorial(10)


@dataclass(frozen=True)
class Permutation:
    """``images[i]`` is the image of point ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise DomainError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> Permutation:
        """Parse cycle notation like ``(0 1 2)(3 4)``; ``()`` is the identity."""
        images = list(range(degree))
        seen: set[int] = set()
        for chunk in text.replace(")", ")\n").splitlines():
            chunk = chunk.strip()
            if not chunk:
                continue
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise DomainError(f"bad cycle notation {text!r}")
            body = chunk[1:-1].replace(",", " ").split()
            try:
                points = [int(x) for x in body]
            except ValueError:
                raise DomainError(f"bad cycle notation {text!r}") from None
            for x in points:
                if not 0 <= x < degree or x in seen:
                    raise DomainError(f"bad point {x} in {text!r} (degree {degree})")
                seen.add(x)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: ``(p * q)(x) == p(q(x))``."""
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycle_type(self) -> CycleType:
        return cycle_type_of(self.images)

    def is_even(self) -> bool:
        return sum((length - 1) * mult for length, mult in self.cycle_type().parts) % 2 == 0

    def cycles(self) -> str:
        seen = set()
        out = []
        for s in range(len(self.images)):
            if s in seen or self.images[s] == s:
                continue
            cyc = [s]
            seen.add(s)
            j = self.images[s]
            while j != s:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(out) or "()"


@lru_cache(maxsize=None)
def perm_table(n: int) -> np.ndarray:
    """All n! permutations as int8 rows, in Lehmer rank order (row 0 is the identity)."""
    if not 1 <= n <= MAX_TABLE_DEGREE:
        raise ResourceLimitError(f"permutation table limited to degree <= {MAX_TABLE_DEGREE}, got {n}")
    table = K.unrank_all(n)
    table.setflags(write=False)
    return table


def rank(perms: np.ndarray) -> np.ndarray:
    perms = np.ascontiguousarray(np.atleast_2d(perms), dtype=np.int8)
    return K.rank_rows(perms)


def closure_ranks(generators, n: int, ceiling: int = DEFAULT_CLOSURE_CEILING) -> np.ndarray:
    """Sorted ranks of the group generated by ``generators`` (image arrays or Permutations)."""
    gens = [g.images if isinstance(g, Permutation) else tuple(int(x) for x in g) for g in generators]
    if any(len(g) != n for g in gens):
        raise DomainError("all generators must have the same degree")
    table = perm_table(n)
    limit = min(ceiling, math.factorial(n))
    if not gens:
        return np.zeros(1, dtype=np.int64)
    arr = np.array(gens, dtype=np.int8)
    visited = np.zeros(math.factorial(n), dtype=np.uint8)
    out = K.closure_ranks(arr, table, limit, visited)
    if out.size == 0:
        raise ResourceLimitError(f"generated group exceeds the closure ceiling {limit}")
    return out


def closure(generators, n: int | None = None, ceiling: int = DEFAULT_CLOSURE_CEILING) -> list[Permutation]:
    """The generated subgroup as an explicit list of permutations (rank order)."""
    generators = list(generators)
    if n is None:
        if not generators:
            raise DomainError("degree is required when there are no generators")
        first = generators[0]
        n = first.degree if isinstance(first, Permutation) else len(first)
    ranks = closure_ranks(generators, n, ceiling)
    table = perm_table(n)
    return [Permutation(tuple(int(x) for x in table[r])) for r in ranks]


def even_mask(n: int) -> np.ndarray:
    counts = K.cycle_counts(perm_table(n))
    lengths = np.arange(1, n + 1)
    return (counts @ (lengths - 1)) % 2 == 0


def cycle_types_of_rows(rows: np.ndarray) -> list[CycleType]:
    rows = np.ascontiguousarray(rows, dtype=np.int8)
    counts = K.cycle_counts(rows)
    n = rows.shape[1]
    out = []
    cache: dict[bytes, CycleType] = {}
    for row in counts:
        key = row.tobytes()
        t = cache.get(key)
        if t is None:
            t = CycleType(n, tuple((i + 1, int(c)) for i, c in enumerate(row) if c))
            cache[key] = t
        out.append(t)
    return out


def conjugate_ranks(ranks: np.ndarray, g: np.ndarray, n: int) -> np.ndarray:
    """Sorted ranks of g H g^-1."""
    table = perm_table(n)
    g = np.asarray(g, dtype=np.int64)
    ginv = np.argsort(g)
    rows = g[table[ranks][:, ginv]]
    return np.sort(rank(rows))
