"""Small permutation groups as explicit element sets, and their maximal subgroups."""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from ..cycletype import CycleType
from ..errors import CatalogError, DomainError, ResourceLimitError
from .perm import (
    Permutation,
    closure_ranks,
    conjugate_ranks,
    cycle_types_of_rows,
    even_mask,
    perm_table,
)

MAX_DEGREE = 8

#: Primitive classes that must be present in the catalog to enumerate maximal
#: subgroups of S_n / A_n at each degree (the maximality filter discards the rest).
REQUIRED_PRIMITIVES = {
    5: ("AGL1_5",),
    6: ("PGL2_5",),
    7: ("AGL1_7", "PSL3_2"),
    8: ("PGL2_7", "AGL3_2"),
}

CATALOG_ENV = "SNCOVER_CATALOG"


@dataclass(frozen=True)
class GroupCatalogEntry:
    name: str
    degree: int
    generators: tuple[Permutation, ...]
    order: int


def parse_catalog(text: str) -> list[GroupCatalogEntry]:
    """Parse ``group <name> degree <n> order <m>`` blocks followed by generator lines."""
    entries = []
    header = None
    gens: list[Permutation] = []

    def flush():
        if header is not None:
            if not gens:
                raise CatalogError(f"catalog group {header[0]} has no generators")
            entries.append(GroupCatalogEntry(header[0], header[1], tuple(gens), header[2]))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("group"):
            flush()
            tok = line.split()
            if len(tok) != 6 or tok[2] != "degree" or tok[4] != "order":
                raise CatalogError(f"line {lineno}: expected 'group <name> degree <n> order <m>'")
            try:
                header = (tok[1], int(tok[3]), int(tok[5]))
            except ValueError:
                raise CatalogError(f"line {lineno}: degree and order must be integers") from None
            gens = []
        else:
            if header is None:
                raise CatalogError(f"line {lineno}: generator before any group header")
            try:
                gens.append(Permutation.from_cycles(line, header[1]))
            except DomainError as exc:
                raise CatalogError(f"line {lineno}: {exc}") from None
    flush()
    return entries


def load_catalog(path: str | os.PathLike | None = None) -> list[GroupCatalogEntry]:
    if path is None:
        path = os.environ.get(CATALOG_ENV)
    if path is None:
        text = resources.files(__package__).joinpath("catalog.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_catalog(text)


@dataclass
class Subgroup:
    """A subgroup of S_degree given by the sorted Lehmer ranks of its elements."""

    label: str
    degree: int
    ranks: np.ndarray

    @property
    def order(self) -> int:
        return int(self.ranks.size)

    def elements(self) -> np.ndarray:
        return perm_table(self.degree)[self.ranks]

    def mask(self) -> np.ndarray:
        m = np.zeros(math.factorial(self.degree), dtype=bool)
        m[self.ranks] = True
        return m

    def issubset(self, other: Subgroup) -> bool:
        if self.order > other.order or other.order % self.order:
            return False
        return bool(np.isin(self.ranks, other.ranks, assume_unique=True).all())


@dataclass
class Group:
    name: str
    degree: int
    ranks: np.ndarray
    _mask: np.ndarray | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return int(self.ranks.size)

    def elements(self) -> np.ndarray:
        return perm_table(self.degree)[self.ranks]

    def mask(self) -> np.ndarray:
        if self._mask is None:
            m = np.zeros(math.factorial(self.degree), dtype=bool)
            m[self.ranks] = True
            self._mask = m
        return self._mask


def symmetric_group(n: int) -> Group:
    return Group(f"S{n}", n, np.arange(math.factorial(n), dtype=np.int64))


def alternating_group(n: int) -> Group:
    return Group(f"A{n}", n, np.flatnonzero(even_mask(n)).astype(np.int64))


def named_group(name: str) -> Group:
    """``S4``, ``A5``, ... for degrees up to 8."""
    kind, deg = name[:1].upper(), name[1:]
    try:
        n = int(deg)
    except ValueError:
        raise DomainError(f"unknown group {name!r}") from None
    if not 2 <= n <= MAX_DEGREE:
        raise DomainError(f"degree {n} outside the supported range 2..{MAX_DEGREE}")
    if kind == "S":
        return symmetric_group(n)
    if kind == "A":
        return alternating_group(n)
    raise DomainError(f"unknown group {name!r}")


def _stabilizer_of_set(n: int, subset) -> np.ndarray:
    table = perm_table(n)
    inside = np.zeros(n, dtype=bool)
    inside[list(subset)] = True
    return np.flatnonzero(inside[table[:, list(subset)]].all(axis=1)).astype(np.int64)


def _stabilizer_of_partition(n: int, blocks) -> np.ndarray:
    table = perm_table(n)
    block_of = np.empty(n, dtype=np.int64)
    for b, block in enumerate(blocks):
        block_of[list(block)] = b
    images = block_of[table]
    ok = np.ones(table.shape[0], dtype=bool)
    for block in blocks:
        cols = images[:, list(block)]
        ok &= (cols == cols[:, :1]).all(axis=1)
    return np.flatnonzero(ok).astype(np.int64)


def set_partitions_equal(n: int, k: int):
    """All partitions of range(n) into blocks of size k (first block contains 0)."""

    def rec(remaining):
        if not remaining:
            yield []
            return
        first = remaining[0]
        for rest in itertools.combinations(remaining[1:], k - 1):
            block = (first,) + rest
            left = [x for x in remaining if x not in block]
            for tail in rec(left):
                yield [block] + tail

    yield from rec(list(range(n)))


def intransitive_member(n: int, subset) -> Subgroup:
    subset = tuple(sorted(subset))
    return Subgroup(f"intransitive:{len(subset)}#{','.join(map(str, subset))}", n, _stabilizer_of_set(n, subset))


def imprimitive_member(n: int, blocks) -> Subgroup:
    k = len(blocks[0])
    spec = "wr2" if len(blocks) == 2 else f"imprimitive:{k}x{len(blocks)}"
    tag = "|".join(",".join(map(str, b)) for b in blocks)
    return Subgroup(f"{spec}#{tag}", n, _stabilizer_of_partition(n, blocks))


def _is_transitive(ranks: np.ndarray, n: int) -> bool:
    images = perm_table(n)[ranks]
    return set(images[:, 0].tolist()) == set(range(n))


def _conjugacy_class(seed: np.ndarray, n: int) -> list[np.ndarray]:
    """All S_n-conjugates of a subgroup, by orbit search under (0 1) and (0 1 ... n-1)."""
    gens = [np.array([1, 0] + list(range(2, n))), np.array(list(range(1, n)) + [0])]
    seen = {seed.tobytes(): seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                c = conjugate_ranks(h, g, n)
                key = c.tobytes()
                if key not in seen:
                    seen[key] = c
                    nxt.append(c)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


def primitive_members(entry: GroupCatalogEntry) -> list[Subgroup]:
    n = entry.degree
    seed = closure_ranks(entry.generators, n)
    if seed.size != entry.order:
        raise CatalogError(f"{entry.name}: generators give order {seed.size}, catalog says {entry.order}")
    if not _is_transitive(seed, n):
        raise CatalogError(f"{entry.name}: generated group is not transitive")
    return [Subgroup(f"primitive:{entry.name}#{i}", n, c) for i, c in enumerate(_conjugacy_class(seed, n))]


def _symmetric_candidates(n: int, catalog) -> list[Subgroup]:
    out = [Subgroup("alternating#0", n, alternating_group(n).ranks)]
    for k in range(1, (n + 1) // 2):
        if 2 * k == n:
            continue
        for subset in itertools.combinations(range(n), k):
            out.append(intransitive_member(n, subset))
    for k in range(2, n // 2 + 1):
        if n % k == 0:
            for blocks in set_partitions_equal(n, k):
                out.append(imprimitive_member(n, blocks))
    for entry in catalog:
        if entry.degree == n:
            out.extend(primitive_members(entry))
    return out


def _check_catalog(n: int, catalog) -> None:
    names = {e.name for e in catalog if e.degree == n}
    missing = [x for x in REQUIRED_PRIMITIVES.get(n, ()) if x not in names]
    if missing:
        raise CatalogError(f"catalog lacks primitive class(es) {missing} needed at degree {n}")


def _maximal_only(cands: list[Subgroup], group_order: int) -> list[Subgroup]:
    # dedupe, then drop anything properly contained in another candidate
    uniq: dict[bytes, Subgroup] = {}
    for c in cands:
        if 1 < c.order < group_order or (c.order == 1 and group_order > 1):
            uniq.setdefault(c.ranks.tobytes(), c)
    items = sorted(uniq.values(), key=lambda s: -s.order)
    big_masks: list[tuple[Subgroup, np.ndarray]] = []
    keep = []
    for s in items:
        contained = False
        for t, tmask in big_masks:
            if t.order > s.order and t.order % s.order == 0 and tmask[s.ranks].all():
                contained = True
                break
        if not contained:
            keep.append(s)
            big_masks.append((s, s.mask()))
    return keep


def maximal_subgroups(group: Group | str, catalog=None) -> list[Subgroup]:
    """Every maximal subgroup of S_n or A_n (n <= 8) as an explicit element set.

    Candidates are the O'Nan-Scott classes realized concretely (A_n, set and
    partition stabilizers, cataloged primitive groups and all their conjugates);
    for A_n they are intersected with A_n. Candidates contained in another are
    discarded. Use :func:`uncovered_two_generated` to cross-check completeness.
    """
    if isinstance(group, str):
        group = named_group(group)
    n = group.degree
    if n > MAX_DEGREE:
        raise DomainError(f"maximal subgroups only enumerated for degree <= {MAX_DEGREE}")
    if catalog is None:
        catalog = load_catalog()
    _check_catalog(n, catalog)
    cands = _symmetric_candidates(n, catalog)
    if group.order == math.factorial(n):
        cands = [c for c in cands if c.label.startswith("alternating") or not even_mask(n)[c.ranks].all()]
    else:
        gmask = group.mask()
        meet = []
        for c in cands:
            if c.label.startswith("alternating"):
                continue
            meet.append(Subgroup(c.label, n, c.ranks[gmask[c.ranks]]))
        cands = meet
    out = _maximal_only(cands, group.order)
    return sorted(out, key=lambda s: (s.label.split("#")[0], -s.order, s.label))


def uncovered_two_generated(group: Group, maximals: list[Subgroup]) -> list[tuple[int, int]]:
    """Pairs (a, b) that generate a proper subgroup lying in no listed maximal subgroup.

    ``a`` runs over one representative per cycle type in the group, ``b`` over all
    elements. If some listed subgroup contains both, <a, b> is inside it; otherwise
    the closure is computed and must be the whole group. An empty result means the
    list is consistent with being complete.
    """
    n = group.degree
    index = {int(r): i for i, r in enumerate(group.ranks)}
    member = np.zeros((group.order, len(maximals)), dtype=bool)
    for j, s in enumerate(maximals):
        member[[index[int(r)] for r in s.ranks], j] = True
    types = cycle_types_of_rows(group.elements())
    reps: dict[CycleType, int] = {}
    for i, t in enumerate(types):
        reps.setdefault(t, i)
    table = perm_table(n)
    half = group.order // 2
    bad = []
    for ai in reps.values():
        shared = (member & member[ai]).any(axis=1)
        for bi in np.flatnonzero(~shared):
            a = table[group.ranks[ai]]
            b = table[group.ranks[bi]]
            try:
                closure_ranks([a, b], n, ceiling=half)
            except ResourceLimitError:
                continue  # order > |G|/2, hence the whole group
            bad.append((int(group.ranks[ai]), int(group.ranks[bi])))
    return bad


def bucket_by_type(member: Subgroup | np.ndarray) -> dict[CycleType, int]:
    """Exact number of elements of each cycle type inside an explicit subgroup."""
    rows = member.elements() if isinstance(member, Subgroup) else np.asarray(member)
    return dict(Counter(cycle_types_of_rows(rows)))
