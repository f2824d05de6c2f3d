"""Exhaustive optimum for small instances; the independent yardstick every
solver is tested against."""
from __future__ import annotations

from .colouring import Colouring
from . import kernels
from .sbm import Instance
from .util import happiness_need

SEARCH_SPACE_LIMIT = 10**7


class OracleError(ValueError):
    pass


def brute_force_optimum(inst: Instance) -> tuple[int, Colouring]:
    """Maximum happy count over all completions of the precolouring, plus the
    lexicographically smallest colouring attaining it.
    """
    free = inst.free_vertices()
    size = inst.k ** int(free.size)
    if size > SEARCH_SPACE_LIMIT:
        raise OracleError(
            f"search space k^free = {size} exceeds bound {SEARCH_SPACE_LIMIT}"
        )
    need = happiness_need(inst.rho, inst.graph.degrees)
    base = inst.precolouring().assignment
    best_h, digits = kernels.brute_force(
        inst.graph.indptr, inst.graph.indices, base, free, need, inst.k
    )
    out = base.copy()
    out[free] = digits
    return int(best_h), Colouring(out, inst.k)
