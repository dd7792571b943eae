import itertools
from collections import Counter
from functools import lru_cache

import numpy as np
import pytest

from sncover.cycletype import CycleType


def lengths_of(perm) -> tuple[int, ...]:
    n = len(perm)
    seen = [False] * n
    out = []
    for i in range(n):
        if not seen[i]:
            j, c = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                c += 1
            out.append(c)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def all_perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int8)


@lru_cache(maxsize=None)
def all_lengths(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(lengths_of(p) for p in all_perms(n).tolist())


def brute_bucket(n: int, keep: np.ndarray) -> Counter:
    """Cycle-type histogram of the permutations selected by a boolean row mask."""
    lens = all_lengths(n)
    return Counter(CycleType.from_lengths(lens[i], n) for i in np.flatnonzero(keep))


def stabilizes_set(n: int, subset) -> np.ndarray:
    table = all_perms(n)
    inside = np.zeros(n, dtype=bool)
    inside[list(subset)] = True
    return inside[table[:, list(subset)]].all(axis=1)


def stabilizes_halving(n: int) -> np.ndarray:
    table = all_perms(n).astype(np.int64)
    side = (np.arange(n) >= n // 2).astype(np.int64)
    img = side[table]
    return (img[:, : n // 2] == img[:, :1]).all(axis=1) & (img[:, n // 2 :] == img[:, n // 2 : n // 2 + 1]).all(axis=1)


def is_even_row(n: int) -> np.ndarray:
    return np.array([(n - len(ls)) % 2 == 0 for ls in all_lengths(n)])


@pytest.fixture(scope="session")
def brute():
    class B:
        perms = staticmethod(all_perms)
        lengths = staticmethod(all_lengths)
        bucket = staticmethod(brute_bucket)
        stab_set = staticmethod(stabilizes_set)
        stab_half = staticmethod(stabilizes_halving)
        even = staticmethod(is_even_row)
    return B
