"""Constructive colouring heuristics.

All five take an instance (whose precolouring is fixed) and colour the free
vertices. Argmax ties anywhere break to the lowest colour index; random
choices come from per-algorithm PCG64 streams derived from the instance
seed, so equal inputs give equal outputs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .colouring import Colouring
from .sbm import Instance
from .util import Deadline, coerce_deadline, happiness_need, seeded_rng

CONSTRUCTIVES = ("greedy", "growth", "ngc", "lmc", "random")


def _base_seed(inst: Instance, seed) -> int:
    if seed is not None:
        return int(seed)
    return int(inst.params.seed) if inst.params is not None else 0


def _count_happy(inst: Instance, colours: np.ndarray, need: np.ndarray) -> int:
    counts = kernels.same_colour_counts(inst.graph.indptr, inst.graph.indices, colours)
    return int(((colours > 0) & (counts >= need)).sum())


def greedy(inst: Instance) -> Colouring:
    """Best single-colour completion of the precolouring."""
    pre = inst.precolouring()
    free = inst.free_vertices()
    if free.size == 0:
        return pre
    need = happiness_need(inst.rho, inst.graph.degrees)
    best_arr = None
    best_h = -1
    for c in range(1, inst.k + 1):
        cand = pre.assignment.copy()
        cand[free] = c
        h = _count_happy(inst, cand, need)
        if h > best_h:
            best_h = h
            best_arr = cand
    return Colouring(best_arr, inst.k)


def random_completion(inst: Instance, seed=None) -> Colouring:
    """Uniform colours on the free vertices."""
    pre = inst.precolouring()
    free = inst.free_vertices()
    if free.size:
        rng = seeded_rng(_base_seed(inst, seed), "random")
        pre.assignment[free] = rng.integers(1, inst.k + 1, size=free.size, dtype=np.int32)
    return pre


def lmc(inst: Instance, seed=None) -> Colouring:
    """Local maximal colouring: random frontier vertex, majority colour."""
    pre = inst.precolouring()
    uncoloured = int((pre.assignment == 0).sum())
    if uncoloured == 0:
        return pre
    floats = seeded_rng(_base_seed(inst, seed), "lmc").random(uncoloured)
    status = kernels.lmc_run(
        inst.graph.indptr, inst.graph.indices, pre.assignment, inst.k, floats
    )
    if status != 0:
        raise RuntimeError("lmc requires every free vertex reachable from a coloured one")
    return pre


def ngc(inst: Instance) -> Colouring:
    """Round-based frontier expansion committing the best colour per round."""
    g = inst.graph
    need = happiness_need(inst.rho, g.degrees)
    colours = inst.precolouring().assignment
    owner = g.half_edge_owners()
    while True:
        unco = colours == 0
        if not unco.any():
            break
        nb_colours = colours[g.indices]
        best_h = -1
        best_c = 0
        best_frontier = None
        for c in range(1, inst.k + 1):
            touched = np.bincount(owner[nb_colours == c], minlength=g.n) > 0
            frontier = unco & touched
            if not frontier.any():
                continue
            cand = colours.copy()
            cand[frontier] = c
            h = _count_happy(inst, cand, need)
            if h > best_h:
                best_h = h
                best_c = c
                best_frontier = frontier
        if best_c == 0:
            break  # no colour has an uncoloured neighbour: disconnected input
        colours[best_frontier] = best_c
    return Colouring(colours, inst.k)


@dataclass(frozen=True)
class GrowthSets:
    """The three priority sets of the growth loop (for inspection/tests).

    P: coloured, not yet happy, but enough uncoloured neighbours to get there.
    Lh: uncoloured, some colour could still make them happy.
    Lu: uncoloured, hopeless under every colour.
    """

    P: frozenset
    Lh: frozenset
    Lu: frozenset


def compute_growth_sets(inst: Instance, colouring: Colouring) -> GrowthSets:
    g = inst.graph
    need = happiness_need(inst.rho, g.degrees)
    colours = colouring.assignment
    cnt, unc = _neighbour_tables(g, colours, inst.k)
    maxcnt = cnt[:, 1:].max(axis=1) if inst.k >= 1 else np.zeros(g.n, dtype=np.int64)
    cur = cnt[np.arange(g.n), colours]
    coloured = colours > 0
    p_mask = coloured & (cur < need) & (cur + unc >= need)
    lh_mask = ~coloured & (maxcnt + unc >= need)
    lu_mask = ~coloured & ~lh_mask
    return GrowthSets(
        P=frozenset(np.nonzero(p_mask)[0].tolist()),
        Lh=frozenset(np.nonzero(lh_mask)[0].tolist()),
        Lu=frozenset(np.nonzero(lu_mask)[0].tolist()),
    )


def _neighbour_tables(g, colours: np.ndarray, k: int):
    """Per-vertex neighbour colour counts (n, k+1) and uncoloured-neighbour counts."""
    owner = g.half_edge_owners()
    nc = colours[g.indices]
    cnt = np.zeros((g.n, k + 1), dtype=np.int32)
    mask = nc > 0
    np.add.at(cnt, (owner[mask], nc[mask].astype(np.int64)), 1)
    unc = np.bincount(owner[~mask], minlength=g.n).astype(np.int64)
    return cnt, unc


def growth(inst: Instance, deadline: Deadline | float | None = None, seed=None) -> Colouring:
    """Priority-set growth; returns a partial colouring if the budget expires."""
    deadline = coerce_deadline(deadline)
    g = inst.graph
    pre = inst.precolouring()
    colours = pre.assignment
    uncoloured = int((colours == 0).sum())
    if uncoloured == 0:
        return pre
    need = happiness_need(inst.rho, g.degrees)
    cnt, unc = _neighbour_tables(g, colours, inst.k)
    maxcnt = cnt[:, 1:].max(axis=1).astype(np.int64)
    rand_colours = seeded_rng(_base_seed(inst, seed), "growth").integers(
        1, inst.k + 1, size=uncoloured, dtype=np.int32
    )
    batch = 256 if kernels.current_backend() == "numba" else 8
    rand_pos = 0
    while True:
        status, _iters, rand_pos = kernels.growth_chunk(
            g.indptr, g.indices, colours, cnt, unc, maxcnt, need,
            rand_colours, rand_pos, batch,
        )
        if status == 0 or deadline.expired():
            break
    return pre
