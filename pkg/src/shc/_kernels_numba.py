"""Numba JIT kernel implementations.

Must match ``_kernels_numpy`` bit for bit, tie-breaks included; the
cross-backend equivalence tests hold both modules to that. Kernels are
cached to disk so repeated processes skip compilation.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def same_colour_counts(indptr, indices, colours):
    n = indptr.shape[0] - 1
    out = np.zeros(n, dtype=np.int64)
    for v in range(n):
        cv = colours[v]
        if cv == 0:
            continue
        s = 0
        for e in range(indptr[v], indptr[v + 1]):
            if colours[indices[e]] == cv:
                s += 1
        out[v] = s
    return out


@njit(cache=True, inline="always")
def _majority_choice(indptr, indices, colours, scratch, u):
    # scratch is a zeroed int64[k+1] workspace; reset before returning.
    best_c = 0
    best_cnt = 0
    for e in range(indptr[u], indptr[u + 1]):
        c = colours[indices[e]]
        if c == 0:
            continue
        scratch[c] += 1
        s = scratch[c]
        if s > best_cnt or (s == best_cnt and c < best_c):
            best_cnt = s
            best_c = c
    if best_cnt > 0:
        cur = colours[u]
        if cur > 0 and scratch[cur] == best_cnt:
            best_c = cur
        for e in range(indptr[u], indptr[u + 1]):
            scratch[colours[indices[e]]] = 0
    return best_c, best_cnt


@njit(cache=True)
def ls_pass(indptr, indices, colours, k, u_arr):
    scratch = np.zeros(k + 1, dtype=np.int64)
    processed = 0
    for i in range(u_arr.shape[0]):
        u = u_arr[i]
        chosen, cnt = _majority_choice(indptr, indices, colours, scratch, u)
        if cnt > 0:
            colours[u] = chosen
            processed += 1
    return processed


@njit(cache=True)
def ls_drain(indptr, indices, colours, free_mask, need, k):
    n = indptr.shape[0] - 1
    in_u = np.zeros(n, dtype=np.bool_)
    remaining = 0
    for v in range(n):
        if not free_mask[v]:
            continue
        cv = colours[v]
        if cv == 0:
            in_u[v] = True
            remaining += 1
            continue
        s = 0
        for e in range(indptr[v], indptr[v + 1]):
            if colours[indices[e]] == cv:
                s += 1
        if s < need[v]:
            in_u[v] = True
            remaining += 1
    scratch = np.zeros(k + 1, dtype=np.int64)
    passes = 0
    while remaining > 0:
        passes += 1
        progressed = False
        for u in range(n):
            if not in_u[u]:
                continue
            chosen, cnt = _majority_choice(indptr, indices, colours, scratch, u)
            if cnt > 0:
                colours[u] = chosen
                in_u[u] = False
                remaining -= 1
                progressed = True
        if not progressed:
            break
    return passes, remaining


@njit(cache=True)
def els_chunk(indptr, indices, colours, need, k, u_arr, same_cnt, happy):
    counts = np.zeros(k + 1, dtype=np.int64)
    commits = 0
    for i in range(u_arr.shape[0]):
        u = u_arr[i]
        for e in range(indptr[u], indptr[u + 1]):
            c = colours[indices[e]]
            if c > 0:
                counts[c] += 1
        old = colours[u]
        u_gain = 0 if happy[u] else 1
        best_q = 0
        best_delta = 0
        for q in range(1, k + 1):
            if q == old or counts[q] < need[u]:
                continue
            delta = u_gain
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                cw = colours[w]
                if cw == 0:
                    continue
                if cw == old:
                    if happy[w] and same_cnt[w] - 1 < need[w]:
                        delta -= 1
                elif cw == q:
                    if (not happy[w]) and same_cnt[w] + 1 >= need[w]:
                        delta += 1
            if delta > best_delta:
                best_delta = delta
                best_q = q
        if best_q > 0:
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                cw = colours[w]
                if cw == 0:
                    continue
                if cw == old:
                    same_cnt[w] -= 1
                    if happy[w] and same_cnt[w] < need[w]:
                        happy[w] = False
                elif cw == best_q:
                    same_cnt[w] += 1
                    if (not happy[w]) and same_cnt[w] >= need[w]:
                        happy[w] = True
            colours[u] = best_q
            same_cnt[u] = counts[best_q]
            happy[u] = counts[best_q] >= need[u]
            commits += 1
        for e in range(indptr[u], indptr[u + 1]):
            counts[colours[indices[e]]] = 0
    return commits


@njit(cache=True, inline="always")
def _growth_assign(indptr, indices, colours, cnt, unc, maxcnt, v, c):
    colours[v] = c
    for e in range(indptr[v], indptr[v + 1]):
        w = indices[e]
        unc[w] -= 1
        cnt[w, c] += 1
        if cnt[w, c] > maxcnt[w]:
            maxcnt[w] = cnt[w, c]


@njit(cache=True)
def growth_chunk(indptr, indices, colours, cnt, unc, maxcnt, need, rand_colours, rand_pos, max_iters):
    n = indptr.shape[0] - 1
    iters = 0
    while iters < max_iters:
        pv = -1
        for v in range(n):
            cv = colours[v]
            if cv == 0:
                continue
            cc = cnt[v, cv]
            if cc < need[v] and cc + unc[v] >= need[v]:
                pv = v
                break
        if pv >= 0:
            c = colours[pv]
            missing = need[pv] - cnt[pv, c]
            for e in range(indptr[pv], indptr[pv + 1]):
                if missing <= 0:
                    break
                w = indices[e]
                if colours[w] == 0:
                    _growth_assign(indptr, indices, colours, cnt, unc, maxcnt, w, c)
                    missing -= 1
        else:
            lh = -1
            lu = -1
            for v in range(n):
                if colours[v] != 0:
                    continue
                if maxcnt[v] + unc[v] >= need[v]:
                    lh = v
                    break
                if lu < 0:
                    lu = v
            if lh >= 0:
                best_c = 1
                best_cnt = cnt[lh, 1]
                for c in range(2, cnt.shape[1]):
                    if cnt[lh, c] > best_cnt:
                        best_cnt = cnt[lh, c]
                        best_c = c
                _growth_assign(indptr, indices, colours, cnt, unc, maxcnt, lh, best_c)
            elif lu >= 0:
                c = rand_colours[rand_pos]
                rand_pos += 1
                _growth_assign(indptr, indices, colours, cnt, unc, maxcnt, lu, c)
            else:
                return 0, iters, rand_pos
        iters += 1
    return 1, iters, rand_pos


@njit(cache=True)
def lmc_run(indptr, indices, colours, k, rand_floats):
    n = indptr.shape[0] - 1
    in_frontier = np.zeros(n, dtype=np.bool_)
    frontier = np.zeros(n, dtype=np.int64)
    size = 0
    uncoloured = 0
    for v in range(n):
        if colours[v] != 0:
            continue
        uncoloured += 1
        for e in range(indptr[v], indptr[v + 1]):
            if colours[indices[e]] > 0:
                frontier[size] = v
                size += 1
                in_frontier[v] = True
                break
    scratch = np.zeros(k + 1, dtype=np.int64)
    pos = 0
    while size > 0:
        r = rand_floats[pos]
        pos += 1
        idx = int(r * size)
        if idx >= size:
            idx = size - 1
        u = frontier[idx]
        frontier[idx] = frontier[size - 1]
        size -= 1
        in_frontier[u] = False
        chosen, _cnt = _majority_choice(indptr, indices, colours, scratch, u)
        colours[u] = chosen
        uncoloured -= 1
        for e in range(indptr[u], indptr[u + 1]):
            w = indices[e]
            if colours[w] == 0 and not in_frontier[w]:
                frontier[size] = w
                size += 1
                in_frontier[w] = True
    return 0 if uncoloured == 0 else 1


@njit(cache=True)
def _count_happy(indptr, indices, colours, need):
    n = indptr.shape[0] - 1
    h = 0
    for v in range(n):
        cv = colours[v]
        if cv == 0:
            continue
        s = 0
        for e in range(indptr[v], indptr[v + 1]):
            if colours[indices[e]] == cv:
                s += 1
        if s >= need[v]:
            h += 1
    return h


@njit(cache=True)
def brute_force(indptr, indices, base_colours, free_verts, need, k):
    f = free_verts.shape[0]
    work = base_colours.copy()
    digits = np.ones(f, dtype=np.int32)
    best_digits = np.ones(f, dtype=np.int32)
    if f == 0:
        return _count_happy(indptr, indices, work, need), np.zeros(0, dtype=np.int32)
    for j in range(f):
        work[free_verts[j]] = 1
    best_h = -1
    while True:
        h = _count_happy(indptr, indices, work, need)
        if h > best_h:
            best_h = h
            for j in range(f):
                best_digits[j] = digits[j]
        # mixed-radix increment, last digit least significant
        pos = f - 1
        while pos >= 0:
            if digits[pos] < k:
                digits[pos] += 1
                work[free_verts[pos]] = digits[pos]
                break
            digits[pos] = 1
            work[free_verts[pos]] = 1
            pos -= 1
        if pos < 0:
            return best_h, best_digits
