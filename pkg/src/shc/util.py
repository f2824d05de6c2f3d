"""Small shared helpers: wall-clock budgets, happiness thresholds, seed streams."""
from __future__ import annotations

import time
import zlib
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# Guard subtracted before ceiling so float artifacts such as
# 0.3 * 10 == 3.0000000000000004 do not bump the threshold.
CEIL_GUARD = 1e-9


def happiness_need(rho, degrees) -> np.ndarray:
    """Per-vertex matching-neighbour threshold ceil(rho * deg).

    ``rho`` may be a float (guarded ceiling) or a ``Fraction`` (exact
    integer arithmetic). Result is a non-negative int64 array.
    """
    degrees = np.asarray(degrees, dtype=np.int64)
    if isinstance(rho, Fraction):
        if rho < 0:
            raise ValueError("rho must be non-negative")
        num, den = rho.numerator, rho.denominator
        return -((-num * degrees) // den)
    rho = float(rho)
    if rho < 0:
        raise ValueError("rho must be non-negative")
    need = np.ceil(rho * degrees - CEIL_GUARD).astype(np.int64)
    return np.maximum(need, 0)


def happiness_need_scalar(rho, degree: int) -> int:
    return int(happiness_need(rho, np.array([degree], dtype=np.int64))[0])


@dataclass(frozen=True)
class Deadline:
    """Cooperative wall-clock budget; algorithms poll `expired` between steps.

    ``t_end`` of None means no limit.
    """

    t_end: float | None

    @classmethod
    def never(cls) -> "Deadline":
        return cls(None)

    @classmethod
    def after_ms(cls, ms: float | None) -> "Deadline":
        if ms is None:
            return cls(None)
        return cls(time.perf_counter() + ms / 1000.0)

    def expired(self) -> bool:
        return self.t_end is not None and time.perf_counter() >= self.t_end


def coerce_deadline(deadline) -> Deadline:
    """Accept a Deadline, a millisecond budget, or None."""
    if deadline is None:
        return Deadline.never()
    if isinstance(deadline, Deadline):
        return deadline
    return Deadline.after_ms(float(deadline))


def seeded_rng(base_seed: int, label: str) -> np.random.Generator:
    """Deterministic PCG64 stream for (seed, purpose) pairs.

    The label is hashed with crc32 so the same (seed, label) pair yields the
    same stream on every platform and run.
    """
    key = zlib.crc32(label.encode("utf-8"))
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=int(base_seed) & (2**64 - 1), spawn_key=(key,))))
