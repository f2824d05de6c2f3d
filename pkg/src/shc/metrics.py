"""Happiness predicate and aggregates, community-detection accuracy, and the
closed-form parameter thresholds.

A vertex with proportion rho is happy when at least ceil(rho * deg) of its
neighbours share its colour; uncoloured vertices are never happy and always
count as community mismatches, so partial colourings flow through the same
aggregates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .colouring import Colouring
from .graph import Graph
from .sbm import Instance, ParameterError
from .util import happiness_need, happiness_need_scalar

E = math.e


class RhoBucket(str, Enum):
    BELOW_MU = "below_mu"
    MU_TO_XITILDE = "mu_to_xitilde"
    ABOVE_XITILDE = "above_xitilde"


@dataclass(frozen=True)
class Thresholds:
    mu: float
    xi: float
    xi_tilde: float
    epsilon: float


@dataclass
class HappinessReport:
    happy_count: int
    alpha: float
    acd: float
    complete: bool
    per_vertex: np.ndarray


def _check_pq(p: float, q: float, k: int, allow_equal: bool = True) -> None:
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if not (0.0 < p <= 1.0):
        raise ParameterError(f"p must lie in (0, 1], got {p}")
    hi_ok = q <= p if allow_equal else q < p
    if not (0.0 < q and hi_ok):
        raise ParameterError(f"q must lie in (0, p{']' if allow_equal else ')'}; got q={q}, p={p}")


def mu(p: float, q: float, k: int) -> float:
    """Lower happiness threshold q / (p + (k-1) q)."""
    _check_pq(p, q, k)
    return q / (p + (k - 1) * q)


def xi_tilde(p: float, q: float, k: int) -> float:
    """Large-n happiness threshold p / (p + (k-1) q)."""
    _check_pq(p, q, k)
    return p / (p + (k - 1) * q)


def xi(n: int, k: int, p: float, q: float, epsilon: float) -> float:
    """Finite-n happiness threshold, clamped to [0, 1].

    Converges to ``xi_tilde`` as n grows; the log term degenerates to 0
    when its argument is non-positive (tiny n or epsilon).
    """
    _check_pq(p, q, k)
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if not (0.0 < epsilon < 1.0):
        raise ParameterError(f"epsilon must lie in (0, 1), got {epsilon}")
    denom = p + (k - 1) * q
    arg = ((k / n) * math.log(epsilon) + p * E + (k - 1) * q) / denom
    log_term = -math.inf if arg <= 0 else math.log(arg)
    return max(min(log_term, p / denom), 0.0)


def thresholds(n: int, k: int, p: float, q: float, epsilon: float = 0.1) -> Thresholds:
    return Thresholds(
        mu=mu(p, q, k),
        xi=xi(n, k, p, q, epsilon),
        xi_tilde=xi_tilde(p, q, k),
        epsilon=epsilon,
    )


def eq1_holds(n: int, k: int, p: float, q: float, rho: float, epsilon: float) -> bool:
    """Strict sufficient condition for the community colouring to be happy."""
    _check_pq(p, q, k)
    if not (0.0 < epsilon < 1.0):
        raise ParameterError(f"epsilon must lie in (0, 1), got {epsilon}")
    lhs = q * (k - 1) * (math.exp(rho) - 1) + p * (math.exp(rho) - E)
    return lhs < (k / n) * math.log(epsilon)


def pi_lower_bound(rho: float, p: float, q: float, k: int) -> float:
    """Community-overlap lower bound (rho (p + (k-1) q) - q) / (p - q).

    Returned unclamped; may be negative (small rho) or exceed 1.
    """
    _check_pq(p, q, k, allow_equal=False)
    if p == q:
        raise ParameterError("bound undefined for p=q")
    return (rho * (p + (k - 1) * q) - q) / (p - q)


def rho_bucket(rho: float, thr: Thresholds) -> RhoBucket:
    """Membership of rho in [0, mu), [mu, xi_tilde], or (xi_tilde, 1]."""
    if rho < thr.mu:
        return RhoBucket.BELOW_MU
    if rho <= thr.xi_tilde:
        return RhoBucket.MU_TO_XITILDE
    return RhoBucket.ABOVE_XITILDE


def happy_vertex_mask(g: Graph, c: Colouring, rho) -> np.ndarray:
    """Boolean happiness per vertex; uncoloured vertices are unhappy."""
    need = happiness_need(rho, g.degrees)
    counts = kernels.same_colour_counts(g.indptr, g.indices, c.assignment)
    return (c.assignment > 0) & (counts >= need)


def is_rho_happy(g: Graph, c: Colouring, rho, v: int) -> bool:
    """Happiness of a single vertex; degree-0 coloured vertices qualify."""
    if c.assignment[v] == 0:
        return False
    nb = g.neighbours(v)
    matching = int((c.assignment[nb] == c.assignment[v]).sum())
    return matching >= happiness_need_scalar(rho, g.degree(v))


def happy_count(g: Graph, c: Colouring, rho) -> int:
    return int(happy_vertex_mask(g, c, rho).sum())


def acd(inst: Instance, c: Colouring) -> float:
    """Fraction of vertices whose colour equals their community id."""
    if inst.n == 0:
        return 0.0
    return float((c.assignment == inst.communities).sum() / inst.n)


def pi_overlap(inst: Instance, c: Colouring, v: int) -> float:
    """Fraction of v's own community coloured like v."""
    cv = int(c.assignment[v])
    if cv == 0:
        raise ValueError("pi undefined for uncoloured vertex")
    comm = int(inst.communities[v])
    members = inst.communities == comm
    return float(((c.assignment == cv) & members).sum() / members.sum())


def happiness_report(inst: Instance, c: Colouring, rho=None) -> HappinessReport:
    """Aggregate happiness and accuracy of a colouring on an instance.

    ``rho`` defaults to the instance proportion.
    """
    if c.k != inst.k:
        raise ValueError(f"colouring has k={c.k}, instance has k={inst.k}")
    if rho is None:
        rho = inst.rho
    per_vertex = happy_vertex_mask(inst.graph, c, rho)
    count = int(per_vertex.sum())
    n = inst.n
    return HappinessReport(
        happy_count=count,
        alpha=count / n if n else 0.0,
        acd=acd(inst, c),
        complete=count == n and n > 0,
        per_vertex=per_vertex,
    )
