"""Exact minimum set cover for subgroup covers of small groups."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from .. import _kernels as K
from ..errors import DomainError
from .groups import Group, Subgroup


@dataclass
class SetCoverInstance:
    universe_size: int
    masks: np.ndarray  # (subsets, words) uint64 bitsets
    labels: list[str]
    elements: np.ndarray | None = None  # rank of the group element behind each universe index

    @property
    def feasible(self) -> bool:
        if self.masks.shape[0] == 0:
            return self.universe_size == 0
        union = np.bitwise_or.reduce(self.masks, axis=0)
        return _popcount(union) == self.universe_size

    def subset_indices(self, s: int) -> np.ndarray:
        bits = np.unpackbits(self.masks[s].view(np.uint8), bitorder="little")
        return np.flatnonzero(bits[: self.universe_size])

    def covers(self, chosen) -> bool:
        if len(chosen) == 0:
            return self.universe_size == 0
        union = np.bitwise_or.reduce(self.masks[list(chosen)], axis=0)
        return _popcount(union) == self.universe_size

    def permuted(self, seed: int) -> tuple[SetCoverInstance, np.ndarray]:
        """Copy with subsets shuffled; also returns the new->old index map."""
        rng = random.Random(seed)
        perm = list(range(len(self.labels)))
        rng.shuffle(perm)
        perm = np.array(perm, dtype=np.int64)
        inst = SetCoverInstance(self.universe_size, self.masks[perm].copy(), [self.labels[i] for i in perm], self.elements)
        return inst, perm


def _popcount(words: np.ndarray) -> int:
    return int(np.unpackbits(np.ascontiguousarray(words).view(np.uint8)).sum())


def instance_from_sets(universe_size: int, sets, labels=None) -> SetCoverInstance:
    words = max(1, (universe_size + 63) // 64)
    masks = np.zeros((len(sets), words), dtype=np.uint64)
    for i, members in enumerate(sets):
        idx = np.asarray(list(members), dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= universe_size):
            raise DomainError(f"subset {i} has elements outside the universe")
        bits = np.zeros(words * 64, dtype=np.uint8)
        bits[idx] = 1
        masks[i] = np.packbits(bits, bitorder="little").view(np.uint64)
    if labels is None:
        labels = [str(i) for i in range(len(sets))]
    return SetCoverInstance(universe_size, masks, list(labels))


def build_cover_instance(group: Group, subgroups: list[Subgroup]) -> SetCoverInstance:
    """Universe = non-identity elements of ``group``; one bitset per proper subgroup.

    The identity lies in every subgroup, so it is left out of the universe.
    """
    elements = group.ranks[group.ranks != 0]
    position = {int(r): i for i, r in enumerate(elements)}
    sets = []
    for s in subgroups:
        if s.order >= group.order:
            raise DomainError(f"{s.label} is not a proper subgroup")
        sets.append([position[int(r)] for r in s.ranks if r != 0])
    inst = instance_from_sets(len(elements), sets, [s.label for s in subgroups])
    inst.elements = elements
    return inst


@dataclass
class CoverResult:
    size: int
    certificate: list[int]
    labels: list[str]
    exact: bool
    lower: int
    upper: int
    nodes: int
    seconds: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "size": str(self.size) if self.exact else None,
            "exact": self.exact,
            "lower_bound": str(self.lower),
            "upper_bound": str(self.upper),
            "certificate": list(self.labels),
            "nodes": str(self.nodes),
        }


def _element_index(inst: SetCoverInstance):
    n, m = inst.universe_size, inst.masks.shape[0]
    bits = np.unpackbits(inst.masks.view(np.uint8), axis=1, bitorder="little")[:, :n].astype(bool)
    deg = bits.sum(axis=0)
    ptr = np.zeros(n + 1, dtype=np.int64)
    ptr[1:] = np.cumsum(deg)
    sub = np.empty(int(ptr[-1]), dtype=np.int64)
    fill = ptr[:-1].copy()
    for s in range(m):
        idx = np.flatnonzero(bits[s])
        sub[fill[idx]] = s
        fill[idx] += 1
    order = np.lexsort((np.arange(n), deg)).astype(np.int64)
    return ptr, sub, order, int(deg.max()) if n else 0


def exact_min_cover(
    inst: SetCoverInstance,
    budget_seconds: float | None = 60.0,
    budget_nodes: int | None = None,
    chunk: int = 20000,
    initial=None,
) -> CoverResult:
    """Minimum number of subsets covering the universe, by branch and bound.

    Runs until the search is exhausted (``exact=True``) or a budget runs out, in
    which case ``lower``/``upper`` bracket the optimum and ``certificate`` is the
    best cover found. ``initial`` seeds the incumbent with a known cover. Every returned certificate is re-checked against the instance.
    """
    if not inst.feasible:
        raise DomainError("instance is infeasible: the subsets do not cover the universe")
    start = time.perf_counter()
    n, m = inst.universe_size, inst.masks.shape[0]
    if n == 0:
        return CoverResult(0, [], [], True, 0, 0, 0)
    masks = np.ascontiguousarray(inst.masks)
    ptr, sub, order, maxdeg = _element_index(inst)
    greedy = K.greedy_cover(masks, n)
    if initial is not None:
        initial = np.array(sorted(set(int(i) for i in initial)), dtype=np.int64)
        if not inst.covers(initial):
            raise DomainError("initial solution does not cover the universe")
        if len(initial) < len(greedy):
            greedy = initial
    depth = len(greedy) + 1
    state = np.array([0, len(greedy), 0, 0, 0, 0], dtype=np.int64)
    chosen = np.full(depth, -1, dtype=np.int64)
    cand = np.zeros((depth, max(maxdeg, 1)), dtype=np.int64)
    ncand = np.zeros(depth, dtype=np.int64)
    pos = np.zeros(depth, dtype=np.int64)
    covs = np.zeros((depth + 1, masks.shape[1]), dtype=np.uint64)
    banned = np.full(m, -1, dtype=np.int64)
    best_sol = np.full(depth, -1, dtype=np.int64)
    best_sol[: len(greedy)] = greedy
    done = 0
    while True:
        step = chunk
        if budget_nodes is not None:
            step = min(step, budget_nodes - int(state[3]))
            if step <= 0:
                break
        done = K.bnb_run(masks, ptr, sub, order, n, state, chosen, cand, ncand, pos, covs, banned, best_sol, step)
        if done:
            break
        if budget_seconds is not None and time.perf_counter() - start > budget_seconds:
            break
    best = int(state[1])
    cert = sorted(int(x) for x in best_sol[:best])
    if not inst.covers(cert):
        raise AssertionError("internal error: branch and bound returned a non-cover")
    exact = bool(done)
    lower = best if exact else max(int(state[5]), 1)
    return CoverResult(
        size=best,
        certificate=cert,
        labels=[inst.labels[i] for i in cert],
        exact=exact,
        lower=lower,
        upper=best,
        nodes=int(state[3]),
        seconds=time.perf_counter() - start,
    )
