"""The three improvement algorithms: ls, rls, els.

Each takes a (possibly partial) colouring that extends the instance
precolouring and returns one with at least as many happy vertices. Only
free vertices are ever touched. ls and rls recolour unhappy free vertices
to the local majority colour and revert wholesale if the sweep lost
happiness; els test-commits only strictly improving single-vertex moves,
so it never needs the revert.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .colouring import Colouring
from .graph import component_labels
from .metrics import HappinessReport, happiness_report
from .sbm import Instance
from .util import Deadline, coerce_deadline, happiness_need

IMPROVERS = ("ls", "rls", "els")
# Relative cost order; pipelines may only stack a strictly heavier improver.
IMPROVER_WEIGHT = {"ls": 0, "rls": 1, "els": 2}

UNREACHABLE_MSG = "LS cannot terminate: unreachable uncoloured component"


class LocalSearchError(RuntimeError):
    pass


@dataclass
class ImproveResult:
    colouring: Colouring
    before: HappinessReport
    after: HappinessReport
    reverted: bool
    elapsed: float
    passes: int


def _validate_input(inst: Instance, sigma: Colouring) -> None:
    if sigma.n != inst.n or sigma.k != inst.k:
        raise ValueError("colouring shape does not match instance")
    if not np.array_equal(
        sigma.assignment[inst.precoloured_vertices], inst.precoloured_colours
    ):
        raise ValueError("colouring does not extend the precolouring")


def _check_reachable(inst: Instance, colours: np.ndarray) -> None:
    if not (colours == 0).any():
        return
    labels = component_labels(inst.graph)
    coloured_labels = np.unique(labels[colours > 0])
    uncoloured_labels = np.unique(labels[colours == 0])
    if not np.isin(uncoloured_labels, coloured_labels).all():
        raise LocalSearchError(UNREACHABLE_MSG)


def _unhappy_free(inst: Instance, colours: np.ndarray, need: np.ndarray) -> np.ndarray:
    counts = kernels.same_colour_counts(inst.graph.indptr, inst.graph.indices, colours)
    mask = inst.free_mask() & ((colours == 0) | (counts < need))
    return np.nonzero(mask)[0].astype(np.int64)


def _finish(inst, sigma, work, before, t0, passes, allow_revert=True):
    after = happiness_report(inst, Colouring(work, inst.k))
    reverted = False
    colouring = Colouring(work, inst.k)
    if allow_revert and after.happy_count < before.happy_count:
        reverted = True
        colouring = sigma.copy()
        after = before
    return ImproveResult(
        colouring=colouring,
        before=before,
        after=after,
        reverted=reverted,
        elapsed=time.perf_counter() - t0,
        passes=max(1, passes),
    )


def ls(inst: Instance, sigma: Colouring) -> ImproveResult:
    """Single drain of the unhappy-free set, majority recolouring per vertex.

    Vertices with no coloured neighbour wait for a later pass; the drain
    terminates on any input whose uncoloured vertices can reach a coloured
    one, and errors otherwise.
    """
    t0 = time.perf_counter()
    _validate_input(inst, sigma)
    before = happiness_report(inst, sigma)
    _check_reachable(inst, sigma.assignment)
    need = happiness_need(inst.rho, inst.graph.degrees)
    work = sigma.assignment.copy()
    passes, remaining = kernels.ls_drain(
        inst.graph.indptr, inst.graph.indices, work, inst.free_mask(), need, inst.k
    )
    if remaining:
        raise LocalSearchError(UNREACHABLE_MSG)
    return _finish(inst, sigma, work, before, t0, passes)


def rls(inst: Instance, sigma: Colouring, deadline: Deadline | float | None = None) -> ImproveResult:
    """ls with the working set recomputed from scratch after every pass.

    Stops when the recomputed set repeats, empties, hits the pass cap (n),
    or the deadline expires.
    """
    t0 = time.perf_counter()
    deadline = coerce_deadline(deadline)
    _validate_input(inst, sigma)
    before = happiness_report(inst, sigma)
    _check_reachable(inst, sigma.assignment)
    need = happiness_need(inst.rho, inst.graph.degrees)
    work = sigma.assignment.copy()
    u_prev = _unhappy_free(inst, work, need)
    passes = 0
    while u_prev.size > 0 and passes < inst.n and not deadline.expired():
        kernels.ls_pass(inst.graph.indptr, inst.graph.indices, work, inst.k, u_prev)
        passes += 1
        u_new = _unhappy_free(inst, work, need)
        if np.array_equal(u_new, u_prev):
            break
        u_prev = u_new
    return _finish(inst, sigma, work, before, t0, passes)


def els(inst: Instance, sigma: Colouring, deadline: Deadline | float | None = None) -> ImproveResult:
    """One sweep committing, per vertex, the best strictly improving colour
    among those that would make the vertex happy.
    """
    t0 = time.perf_counter()
    deadline = coerce_deadline(deadline)
    _validate_input(inst, sigma)
    before = happiness_report(inst, sigma)
    _check_reachable(inst, sigma.assignment)
    g = inst.graph
    need = happiness_need(inst.rho, g.degrees)
    work = sigma.assignment.copy()
    same_cnt = kernels.same_colour_counts(g.indptr, g.indices, work)
    happy = (work > 0) & (same_cnt >= need)
    u = _unhappy_free(inst, work, need)
    chunk = 2048 if kernels.current_backend() == "numba" else 64
    i = 0
    while i < u.size and not deadline.expired():
        j = min(i + chunk, u.size)
        kernels.els_chunk(g.indptr, g.indices, work, need, inst.k, u[i:j], same_cnt, happy)
        i = j
    return _finish(inst, sigma, work, before, t0, 1, allow_revert=False)
