"""Experiment record rows destined for CSV."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass
class ExperimentRecord:
    """One (instance, algorithm) run. Threshold and provenance fields are
    None for instances loaded from files without generation parameters;
    ``reverted`` is None for purely constructive pipelines.
    """

    instance_id: str
    n: int
    k: int
    p: float | None
    q: float | None
    pcc: int | None
    rho: float
    seed: int | None
    mu: float | None
    xi: float | None
    xi_tilde: float | None
    bucket: str | None
    algorithm: str
    alpha: float
    acd: float
    happy_count: int
    complete: bool
    reverted: bool | None
    elapsed_ms: float


CSV_COLUMNS = (
    "instance_id",
    "n",
    "k",
    "p",
    "q",
    "pcc",
    "rho",
    "seed",
    "mu",
    "xi",
    "xi_tilde",
    "bucket",
    "algorithm",
    "alpha",
    "acd",
    "happy_count",
    "complete",
    "reverted",
    "elapsed_ms",
)
