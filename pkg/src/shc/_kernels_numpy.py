"""Pure numpy/python kernel implementations.

Reference semantics for the numba kernels in ``_kernels_numba``: every
function here must produce bit-identical results to its JIT twin, including
all tie-breaking rules. Sequential algorithms run as plain Python loops over
numpy state, so this backend is correct everywhere but slow on large inputs.
"""
from __future__ import annotations

import numpy as np


def same_colour_counts(indptr, indices, colours):
    """For each coloured v: number of coloured neighbours sharing its colour."""
    n = indptr.shape[0] - 1
    degs = np.diff(indptr)
    owner = np.repeat(np.arange(n, dtype=np.int64), degs)
    own = colours[owner]
    nc = colours[indices]
    valid = (nc == own) & (nc > 0)
    return np.bincount(owner[valid], minlength=n).astype(np.int64)


def _majority_choice(indptr, indices, colours, u):
    """(chosen colour, top count); (0, 0) when u has no coloured neighbour.

    Ties break to the lowest colour, except that a coloured u keeps its
    current colour when it ties the top count.
    """
    nb = indices[indptr[u] : indptr[u + 1]]
    nc = colours[nb]
    nc = nc[nc > 0]
    if nc.size == 0:
        return 0, 0
    counts = np.bincount(nc)
    best_cnt = int(counts.max())
    cur = int(colours[u])
    if cur > 0 and cur < counts.size and counts[cur] == best_cnt:
        return cur, best_cnt
    return int(np.argmax(counts)), best_cnt


def ls_pass(indptr, indices, colours, k, u_arr):
    """One ascending pass assigning majority colours; returns count processed.

    Vertices without a coloured neighbour are skipped (left for the caller).
    Mutates ``colours``.
    """
    processed = 0
    for u in u_arr:
        chosen, cnt = _majority_choice(indptr, indices, colours, int(u))
        if cnt > 0:
            colours[u] = chosen
            processed += 1
    return processed


def ls_drain(indptr, indices, colours, free_mask, need, k):
    """Repeated passes over the initial unhappy-free set until it drains.

    Returns (passes, remaining); remaining > 0 means no pass made progress,
    i.e. some uncoloured vertices can never see a coloured neighbour.
    Mutates ``colours``.
    """
    counts = same_colour_counts(indptr, indices, colours)
    in_u = free_mask & ((colours == 0) | (counts < need))
    remaining = int(in_u.sum())
    passes = 0
    while remaining > 0:
        passes += 1
        progressed = False
        for u in np.nonzero(in_u)[0]:
            chosen, cnt = _majority_choice(indptr, indices, colours, int(u))
            if cnt > 0:
                colours[u] = chosen
                in_u[u] = False
                remaining -= 1
                progressed = True
        if not progressed:
            break
    return passes, remaining


def els_chunk(indptr, indices, colours, need, k, u_arr, same_cnt, happy):
    """Best-improvement sweep step over ``u_arr``.

    For each u, candidate colours are those whose matching-neighbour count
    meets u's threshold; the strictly best global happiness delta is
    committed (ties to the lowest colour). Mutates colours/same_cnt/happy.
    Returns the number of committed recolourings.
    """
    commits = 0
    for u in u_arr:
        u = int(u)
        nb = indices[indptr[u] : indptr[u + 1]]
        nc = colours[nb]
        counts = np.bincount(nc[nc > 0], minlength=k + 1)
        old = int(colours[u])
        u_happy = bool(happy[u])
        best_q = 0
        best_delta = 0
        for q in range(1, k + 1):
            if q == old or counts[q] < need[u]:
                continue
            delta = 1 - (1 if u_happy else 0)
            for w in nb:
                cw = int(colours[w])
                if cw == 0:
                    continue
                if cw == old:
                    if happy[w] and same_cnt[w] - 1 < need[w]:
                        delta -= 1
                elif cw == q:
                    if not happy[w] and same_cnt[w] + 1 >= need[w]:
                        delta += 1
            if delta > best_delta:
                best_delta = delta
                best_q = q
        if best_q > 0:
            for w in nb:
                cw = int(colours[w])
                if cw == 0:
                    continue
                if cw == old:
                    same_cnt[w] -= 1
                    if happy[w] and same_cnt[w] < need[w]:
                        happy[w] = False
                elif cw == best_q:
                    same_cnt[w] += 1
                    if not happy[w] and same_cnt[w] >= need[w]:
                        happy[w] = True
            colours[u] = best_q
            same_cnt[u] = counts[best_q]
            happy[u] = counts[best_q] >= need[u]
            commits += 1
    return commits


def _growth_assign(indptr, indices, colours, cnt, unc, maxcnt, v, c):
    colours[v] = c
    nb = indices[indptr[v] : indptr[v + 1]]
    unc[nb] -= 1
    cnt[nb, c] += 1
    maxcnt[nb] = np.maximum(maxcnt[nb], cnt[nb, c])


def growth_chunk(indptr, indices, colours, cnt, unc, maxcnt, need, rand_colours, rand_pos, max_iters):
    """Up to ``max_iters`` iterations of the growth priority loop.

    Priority: lowest-id capable-but-unhappy coloured vertex (gets enough of
    its uncoloured neighbours, ascending, coloured to reach its threshold),
    else lowest-id uncoloured vertex that can still become happy (coloured
    with its strongest neighbour colour), else lowest-id hopeless uncoloured
    vertex (random colour from the supplied stream).

    Returns (status, iters_done, rand_pos) with status 0 = nothing left to
    do, 1 = iteration budget exhausted. Mutates state arrays.
    """
    n = indptr.shape[0] - 1
    ids = np.arange(n)
    iters = 0
    while iters < max_iters:
        coloured = colours > 0
        cur_cnt = cnt[ids, colours]
        p_mask = coloured & (cur_cnt < need) & (cur_cnt + unc >= need)
        if p_mask.any():
            v = int(np.argmax(p_mask))
            c = int(colours[v])
            missing = int(need[v] - cnt[v, c])
            nb = indices[indptr[v] : indptr[v + 1]]
            for w in nb:
                if missing <= 0:
                    break
                if colours[w] == 0:
                    _growth_assign(indptr, indices, colours, cnt, unc, maxcnt, int(w), c)
                    missing -= 1
        else:
            unco = ~coloured
            if not unco.any():
                return 0, iters, rand_pos
            lh_mask = unco & (maxcnt + unc >= need)
            if lh_mask.any():
                v = int(np.argmax(lh_mask))
                c = int(np.argmax(cnt[v, 1:])) + 1
                _growth_assign(indptr, indices, colours, cnt, unc, maxcnt, v, c)
            else:
                v = int(np.argmax(unco))
                c = int(rand_colours[rand_pos])
                rand_pos += 1
                _growth_assign(indptr, indices, colours, cnt, unc, maxcnt, v, c)
        iters += 1
    return 1, iters, rand_pos


def lmc_run(indptr, indices, colours, k, rand_floats):
    """Random-frontier majority colouring until no uncoloured vertex remains.

    The frontier is kept as an array with swap-removal; the float stream
    drives the uniform frontier pick. Returns 0 on completion, 1 if stuck
    with uncoloured vertices unreachable from any coloured one. Mutates
    ``colours``.
    """
    n = indptr.shape[0] - 1
    in_frontier = np.zeros(n, dtype=np.bool_)
    frontier = np.zeros(n, dtype=np.int64)
    size = 0
    uncoloured = 0
    for v in range(n):
        if colours[v] != 0:
            continue
        uncoloured += 1
        nb = indices[indptr[v] : indptr[v + 1]]
        if (colours[nb] > 0).any():
            frontier[size] = v
            size += 1
            in_frontier[v] = True
    pos = 0
    while size > 0:
        r = rand_floats[pos]
        pos += 1
        idx = int(r * size)
        if idx >= size:
            idx = size - 1
        u = int(frontier[idx])
        frontier[idx] = frontier[size - 1]
        size -= 1
        in_frontier[u] = False
        chosen, _cnt = _majority_choice(indptr, indices, colours, u)
        colours[u] = chosen
        uncoloured -= 1
        for w in indices[indptr[u] : indptr[u + 1]]:
            w = int(w)
            if colours[w] == 0 and not in_frontier[w]:
                frontier[size] = w
                size += 1
                in_frontier[w] = True
    return 0 if uncoloured == 0 else 1


def brute_force(indptr, indices, base_colours, free_verts, need, k):
    """Exhaustive search over colour assignments to ``free_verts``.

    Enumerates mixed-radix ascending (first free vertex most significant,
    colours 1..k), so the first maximum is the lexicographically smallest.
    Returns (best happy count, best digit vector).
    """
    n = indptr.shape[0] - 1
    f = int(free_verts.shape[0])
    degs = np.diff(indptr)
    owner = np.repeat(np.arange(n, dtype=np.int64), degs)
    total = k**f
    if f == 0:
        counts = same_colour_counts(indptr, indices, base_colours)
        h = int(((base_colours > 0) & (counts >= need)).sum())
        return h, np.zeros(0, dtype=np.int32)
    starts = np.minimum(indptr[:-1], max(indices.shape[0] - 1, 0))
    weights = np.array([k ** (f - 1 - j) for j in range(f)], dtype=np.int64)
    block = max(1, min(8192, 10**7 // max(1, indices.shape[0])))
    best_h = -1
    best_digits = np.zeros(f, dtype=np.int32)
    for lo in range(0, total, block):
        hi = min(lo + block, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = (idx[:, None] // weights[None, :]) % k + 1
        assign = np.broadcast_to(base_colours, (hi - lo, n)).copy()
        assign[:, free_verts] = digits
        own = assign[:, owner]
        nc = assign[:, indices]
        eq = (nc == own).astype(np.int32)
        if indices.shape[0] > 0:
            same = np.add.reduceat(eq, starts, axis=1)
            same[:, degs == 0] = 0
        else:
            same = np.zeros((hi - lo, n), dtype=np.int64)
        happy = same >= need[None, :]
        counts = happy.sum(axis=1)
        j = int(np.argmax(counts))
        if int(counts[j]) > best_h:
            best_h = int(counts[j])
            best_digits = digits[j].astype(np.int32)
    return best_h, best_digits
