"""Dense vertex colourings; colour 0 is the reserved "uncoloured" sentinel."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ColouringError(ValueError):
    """Raised for colour values outside 0..k."""


@dataclass
class Colouring:
    """Assignment array of length n with values in 0..k (0 = uncoloured)."""

    assignment: np.ndarray
    k: int

    def __post_init__(self):
        self.assignment = np.ascontiguousarray(self.assignment, dtype=np.int32)
        if self.assignment.size and (
            self.assignment.min() < 0 or self.assignment.max() > self.k
        ):
            raise ColouringError(f"colour values must lie in 0..{self.k}")

    @classmethod
    def empty(cls, n: int, k: int) -> "Colouring":
        return cls(np.zeros(n, dtype=np.int32), k)

    @property
    def n(self) -> int:
        return int(self.assignment.shape[0])

    def copy(self) -> "Colouring":
        return Colouring(self.assignment.copy(), self.k)

    def colour(self, v: int) -> int:
        return int(self.assignment[v])

    def coloured_mask(self) -> np.ndarray:
        return self.assignment > 0

    def uncoloured_count(self) -> int:
        return int((self.assignment == 0).sum())

    def is_complete(self) -> bool:
        return bool((self.assignment > 0).all())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Colouring)
            and self.k == other.k
            and np.array_equal(self.assignment, other.assignment)
        )
