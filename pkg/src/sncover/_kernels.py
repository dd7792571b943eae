"""Hot loops. Every function here compiles under numba and also runs unchanged
as plain Python when numba is disabled (see :mod:`sncover._accel`)."""

import numpy as np

from ._accel import njit

# ---------------------------------------------------------------- partitions


@njit
def _partition_uncovered(part, k, n, kmask, has_alt, has_wr2):
    # subset sums as a bitmask; n <= 62 so everything fits in uint64
    sums = np.uint64(1)
    odd = 0
    all_even = True
    for j in range(k):
        p = part[j]
        sums = sums | (sums << np.uint64(p))
        odd += p - 1
        if p % 2:
            all_even = False
    if sums & kmask:
        return False
    if has_alt and odd % 2 == 0:
        return False
    if has_wr2 and ((sums >> np.uint64(n // 2)) & np.uint64(1) or all_even):
        return False
    return True


@njit
def sweep_uncovered(n, kmask, has_alt, has_wr2, out):
    """Walk all partitions of n (ascending, lexicographic) and record those not
    covered by the given type-level family predicates.

    ``out`` has shape (cap, n); rows past ``cap`` are counted but not stored.
    Returns the total number of uncovered partitions.
    """
    a = np.zeros(n + 1, dtype=np.int64)
    cap = out.shape[0]
    found = 0
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
            if _partition_uncovered(a, k + 2, n, kmask, has_alt, has_wr2):
                if found < cap:
                    for j in range(k + 2):
                        out[found, j] = a[j]
                found += 1
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        if _partition_uncovered(a, k + 1, n, kmask, has_alt, has_wr2):
            if found < cap:
                for j in range(k + 1):
                    out[found, j] = a[j]
            found += 1
    return found


# -------------------------------------------------------------- permutations


@njit
def factorials(n):
    f = np.ones(n + 1, dtype=np.int64)
    for i in range(2, n + 1):
        f[i] = f[i - 1] * i
    return f


@njit
def rank_rows(perms):
    """Lehmer-code rank of each row; ranks are a bijection onto [0, n!)."""
    m, n = perms.shape
    fact = factorials(n)
    out = np.empty(m, dtype=np.int64)
    for r in range(m):
        rank = 0
        for i in range(n):
            smaller = 0
            for j in range(i + 1, n):
                if perms[r, j] < perms[r, i]:
                    smaller += 1
            rank += smaller * fact[n - 1 - i]
        out[r] = rank
    return out


@njit
def unrank_all(n):
    """Table of all n! permutations in rank order."""
    fact = factorials(n)
    total = fact[n]
    out = np.empty((total, n), dtype=np.int8)
    avail = np.empty(n, dtype=np.int64)
    for r in range(total):
        for i in range(n):
            avail[i] = i
        size = n
        rem = r
        for i in range(n):
            q = rem // fact[n - 1 - i]
            rem -= q * fact[n - 1 - i]
            out[r, i] = avail[q]
            for j in range(q, size - 1):
                avail[j] = avail[j + 1]
            size -= 1
    return out


@njit
def _rank_one(p, fact):
    n = p.shape[0]
    rank = 0
    for i in range(n):
        smaller = 0
        for j in range(i + 1, n):
            if p[j] < p[i]:
                smaller += 1
        rank += smaller * fact[n - 1 - i]
    return rank


@njit
def closure_ranks(gens, table, limit, visited):
    """Ranks of the subgroup generated by ``gens`` (rows in image form).

    ``table`` is the full rank-ordered permutation table, ``visited`` a scratch
    byte array of length n! that must be all zero on entry and is left all zero.
    Returns an empty array when the group order would exceed ``limit``.
    """
    n = gens.shape[1]
    fact = factorials(n)
    queue = np.empty(limit + 1, dtype=np.int64)
    ident = 0
    queue[0] = ident
    visited[ident] = 1
    size = 1
    head = 0
    prod = np.empty(n, dtype=np.int8)
    overflow = False
    while head < size and not overflow:
        cur = table[queue[head]]
        head += 1
        for g in range(gens.shape[0]):
            for i in range(n):
                prod[i] = gens[g, cur[i]]
            r = _rank_one(prod, fact)
            if visited[r] == 0:
                if size >= limit:
                    overflow = True
                    break
                visited[r] = 1
                queue[size] = r
                size += 1
    for i in range(size):
        visited[queue[i]] = 0
    if overflow:
        return np.empty(0, dtype=np.int64)
    return np.sort(queue[:size])


@njit
def cycle_counts(perms):
    """Row r, column l-1: number of l-cycles of permutation r."""
    m, n = perms.shape
    out = np.zeros((m, n), dtype=np.int64)
    seen = np.zeros(n, dtype=np.uint8)
    for r in range(m):
        seen[:] = 0
        for s in range(n):
            if seen[s]:
                continue
            length = 0
            j = s
            while not seen[j]:
                seen[j] = 1
                j = perms[r, j]
                length += 1
            out[r, length - 1] += 1
    return out


# ----------------------------------------------------------------- set cover


@njit
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return int((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit
def _gain(masks, s, cov):
    total = 0
    for w in range(masks.shape[1]):
        total += _popcount64(masks[s, w] & ~cov[w])
    return total


@njit
def greedy_cover(masks, universe):
    """Greedy set cover; returns chosen subset indices (ties: lowest index)."""
    m, nw = masks.shape
    cov = np.zeros(nw, dtype=np.uint64)
    chosen = np.empty(m, dtype=np.int64)
    nchosen = 0
    remaining = universe
    while remaining > 0:
        best = -1
        best_gain = 0
        for s in range(m):
            g = _gain(masks, s, cov)
            if g > best_gain:
                best_gain = g
                best = s
        if best < 0:
            return chosen[:0]
        chosen[nchosen] = best
        nchosen += 1
        for w in range(nw):
            cov[w] |= masks[best, w]
        remaining -= best_gain
    return chosen[:nchosen]


@njit
def _lower_bound(masks, elem_ptr, elem_sub, order, cov, banned, gains, hit, universe):
    """max(greedy element packing, ceil of the fractional dual bound); -1 if some
    uncovered element has no admissible subset left."""
    m = masks.shape[0]
    for s in range(m):
        gains[s] = _gain(masks, s, cov) if banned[s] < 0 else 0
        hit[s] = 0
    frac = 0.0
    packing = 0
    for idx in range(universe):
        e = order[idx]
        if (cov[e >> 6] >> np.uint64(e & 63)) & np.uint64(1):
            continue
        best = 0
        free = True
        for q in range(elem_ptr[e], elem_ptr[e + 1]):
            s = elem_sub[q]
            if banned[s] >= 0:
                continue
            if gains[s] > best:
                best = gains[s]
            if hit[s]:
                free = False
        if best == 0:
            return -1
        frac += 1.0 / best
        if free:
            packing += 1
            for q in range(elem_ptr[e], elem_ptr[e + 1]):
                hit[elem_sub[q]] = 1
    lb = int(np.ceil(frac - 1e-9))
    return lb if lb > packing else packing


@njit
def bnb_run(masks, elem_ptr, elem_sub, order, universe, state, chosen, cand, ncand, pos, covs,
            banned, best_sol, node_budget):
    """Resumable depth-first branch and bound for minimum set cover.

    Branches on the uncovered element with the fewest admissible subsets; the
    i-th child bans children 0..i-1 for its whole subtree. All search state lives
    in the arrays passed in, so the search can be paused after ``node_budget``
    expansions and resumed by calling again.

    ``state`` = [depth, best_size, mode, nodes_total, finished, root_lb] where
    mode 0 means "expand node at depth", 1 means "advance to next child".
    Returns 1 when the search space is exhausted, 0 when paused.
    """
    m, nw = masks.shape
    gains = np.zeros(m, dtype=np.int64)
    hit = np.zeros(m, dtype=np.uint8)
    d = state[0]
    best = state[1]
    mode = state[2]
    nodes = 0
    while True:
        if mode == 0:
            if nodes >= node_budget:
                break
            nodes += 1
            cov = covs[d]
            covered = 0
            for w in range(nw):
                covered += _popcount64(cov[w])
            if covered == universe:
                if d < best:
                    best = d
                    for i in range(d):
                        best_sol[i] = chosen[i]
                    best_sol[d:] = -1
                mode = 1
                d -= 1
                if d < 0:
                    state[4] = 1
                    break
                continue
            lb = _lower_bound(masks, elem_ptr, elem_sub, order, cov, banned, gains, hit, universe)
            if d == 0 and state[3] == 0 and lb > state[5]:
                state[5] = lb
            if lb < 0 or d + lb >= best:
                mode = 1
                d -= 1
                if d < 0:
                    state[4] = 1
                    break
                continue
            # branching element: fewest admissible subsets, ties -> lowest index
            be = -1
            bdeg = m + 1
            for e in range(universe):
                if (cov[e >> 6] >> np.uint64(e & 63)) & np.uint64(1):
                    continue
                deg = 0
                for q in range(elem_ptr[e], elem_ptr[e + 1]):
                    if banned[elem_sub[q]] < 0:
                        deg += 1
                if deg < bdeg:
                    bdeg = deg
                    be = e
            # candidates sorted by descending gain (gains filled by _lower_bound)
            c = 0
            for q in range(elem_ptr[be], elem_ptr[be + 1]):
                s = elem_sub[q]
                if banned[s] >= 0:
                    continue
                j = c
                while j > 0 and (gains[cand[d, j - 1]] < gains[s]
                                 or (gains[cand[d, j - 1]] == gains[s] and cand[d, j - 1] > s)):
                    cand[d, j] = cand[d, j - 1]
                    j -= 1
                cand[d, j] = s
                c += 1
            ncand[d] = c
            pos[d] = -1
            mode = 1
        else:
            # advance to the next child at depth d
            if pos[d] >= 0:
                banned[cand[d, pos[d]]] = d
            pos[d] += 1
            if pos[d] >= ncand[d] or d + 1 >= best:
                for s in range(m):
                    if banned[s] == d:
                        banned[s] = -1
                d -= 1
                if d < 0:
                    state[4] = 1
                    break
                continue
            s = cand[d, pos[d]]
            chosen[d] = s
            for w in range(nw):
                covs[d + 1, w] = covs[d, w] | masks[s, w]
            d += 1
            mode = 0
    state[0] = d
    state[1] = best
    state[2] = mode
    state[3] += nodes
    return state[4]
