"""Partially precoloured block-model instances.

A generated instance has k near-equal communities (sizes differ by at most
one, remainder on the lowest-numbered communities), independent intra- and
inter-community edges with probabilities p and q < p, and the first ``pcc``
vertices of every community precoloured with the community id. Disconnected
samples are rejected and redrawn from the same stream, capped at 50 tries.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .colouring import Colouring
from .graph import Graph, from_sorted_unique_edges, is_connected

CONNECTIVITY_RETRY_LIMIT = 50


class ParameterError(ValueError):
    """Raised when generation parameters fall outside their domain."""


class GenerationError(RuntimeError):
    """Raised when no connected sample is found within the retry limit."""


@dataclass(frozen=True)
class SbmParams:
    n: int
    k: int
    p: float
    q: float
    pcc: int = 1
    seed: int = 0

    def validate(self) -> None:
        if self.k < 2:
            raise ParameterError(f"k must be >= 2, got {self.k}")
        if self.k > self.n:
            raise ParameterError(f"k={self.k} exceeds n={self.n}")
        if not (0.0 < self.p <= 1.0):
            raise ParameterError(f"p must lie in (0, 1], got {self.p}")
        if not (0.0 < self.q < self.p):
            raise ParameterError(
                f"q must lie in (0, p); got q={self.q}, p={self.p}"
            )
        if not (1 <= self.pcc <= self.n // self.k):
            raise ParameterError(
                f"pcc must lie in 1..floor(n/k)={self.n // self.k}, got {self.pcc}"
            )


def community_sizes(n: int, k: int) -> np.ndarray:
    """Sizes floor(n/k) or ceil(n/k); the remainder goes to the first n mod k."""
    base, rem = divmod(n, k)
    sizes = np.full(k, base, dtype=np.int64)
    sizes[:rem] += 1
    return sizes


@dataclass
class Instance:
    """Graph plus colour count, happiness proportion, ground-truth communities
    and the fixed precolouring. ``params`` records generation provenance and is
    None for hand-built or file-loaded instances without it.
    """

    graph: Graph
    k: int
    rho: float
    communities: np.ndarray
    precoloured_vertices: np.ndarray
    precoloured_colours: np.ndarray
    params: SbmParams | None = None

    def __post_init__(self):
        self.communities = np.ascontiguousarray(self.communities, dtype=np.int32)
        self.precoloured_vertices = np.ascontiguousarray(
            self.precoloured_vertices, dtype=np.int64
        )
        self.precoloured_colours = np.ascontiguousarray(
            self.precoloured_colours, dtype=np.int32
        )

    @property
    def n(self) -> int:
        return self.graph.n

    def precolouring(self) -> Colouring:
        c = Colouring.empty(self.n, self.k)
        c.assignment[self.precoloured_vertices] = self.precoloured_colours
        return c

    def free_mask(self) -> np.ndarray:
        mask = np.ones(self.n, dtype=bool)
        mask[self.precoloured_vertices] = False
        return mask

    def free_vertices(self) -> np.ndarray:
        return np.nonzero(self.free_mask())[0]

    def community_sizes(self) -> np.ndarray:
        return np.bincount(self.communities, minlength=self.k + 1)[1:].astype(np.int64)

    def validate(self) -> None:
        n = self.n
        if not (0.0 <= self.rho <= 1.0):
            raise ParameterError(f"rho must lie in [0, 1], got {self.rho}")
        if self.communities.shape[0] != n:
            raise ParameterError("community assignment incomplete")
        if self.communities.size and (
            self.communities.min() < 1 or self.communities.max() > self.k
        ):
            raise ParameterError(f"community ids must lie in 1..{self.k}")
        sizes = self.community_sizes()
        if sizes.size and sizes.max() - sizes.min() > 1:
            raise ParameterError("community sizes differ by more than 1")
        if np.unique(self.precoloured_vertices).size != self.precoloured_vertices.size:
            raise ParameterError("duplicate precoloured vertex")
        if not np.array_equal(
            self.precoloured_colours, self.communities[self.precoloured_vertices]
        ):
            raise ParameterError("precolouring violates community rule")
        owned = np.unique(self.precoloured_colours)
        if owned.size != self.k:
            missing = sorted(set(range(1, self.k + 1)) - set(owned.tolist()))
            raise ParameterError(
                f"every community needs a precoloured vertex; missing {missing}"
            )
        if not is_connected(self.graph):
            raise ParameterError("instance not connected")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Instance)
            and self.graph == other.graph
            and self.k == other.k
            and self.rho == other.rho
            and np.array_equal(self.communities, other.communities)
            and np.array_equal(self.precoloured_vertices, other.precoloured_vertices)
            and np.array_equal(self.precoloured_colours, other.precoloured_colours)
            and self.params == other.params
        )


def make_instance(
    graph: Graph,
    k: int,
    rho: float,
    communities,
    precoloured,
    params: SbmParams | None = None,
    validate: bool = True,
) -> Instance:
    """Assemble an Instance from explicit pieces (tests, file parsing).

    ``precoloured`` is an iterable of (vertex, colour) pairs.
    """
    pairs = sorted((int(v), int(c)) for v, c in precoloured)
    verts = np.array([v for v, _ in pairs], dtype=np.int64)
    cols = np.array([c for _, c in pairs], dtype=np.int32)
    inst = Instance(
        graph=graph,
        k=int(k),
        rho=float(rho),
        communities=np.asarray(communities, dtype=np.int32),
        precoloured_vertices=verts,
        precoloured_colours=cols,
        params=params,
    )
    if validate:
        inst.validate()
    return inst


def _sample_edges(params: SbmParams, rng: np.random.Generator, starts: np.ndarray):
    lows, highs = [], []
    k = params.k
    for i in range(k):
        a0, a1 = int(starts[i]), int(starts[i + 1])
        for j in range(i, k):
            b0, b1 = int(starts[j]), int(starts[j + 1])
            prob = params.p if i == j else params.q
            block = rng.random((a1 - a0, b1 - b0)) < prob
            if i == j:
                block = np.triu(block, 1)
            r, c = np.nonzero(block)
            lows.append(r.astype(np.int64) + a0)
            highs.append(c.astype(np.int64) + b0)
    lo = np.concatenate(lows) if lows else np.empty(0, dtype=np.int64)
    hi = np.concatenate(highs) if highs else np.empty(0, dtype=np.int64)
    order = np.lexsort((hi, lo))
    return lo[order], hi[order]


def generate(params: SbmParams, rho: float) -> Instance:
    """Draw a connected precoloured instance; pure function of (params, rho)."""
    params.validate()
    if not (0.0 <= rho <= 1.0):
        raise ParameterError(f"rho must lie in [0, 1], got {rho}")
    sizes = community_sizes(params.n, params.k)
    starts = np.concatenate([[0], np.cumsum(sizes)])
    communities = np.repeat(np.arange(1, params.k + 1, dtype=np.int32), sizes)
    pre_verts = np.concatenate(
        [np.arange(starts[i], starts[i] + params.pcc) for i in range(params.k)]
    ).astype(np.int64)
    pre_cols = communities[pre_verts]

    rng = np.random.Generator(np.random.PCG64(params.seed))
    for _ in range(CONNECTIVITY_RETRY_LIMIT):
        lo, hi = _sample_edges(params, rng, starts)
        graph = from_sorted_unique_edges(params.n, lo, hi)
        if is_connected(graph):
            inst = Instance(
                graph=graph,
                k=params.k,
                rho=float(rho),
                communities=communities,
                precoloured_vertices=pre_verts,
                precoloured_colours=pre_cols,
                params=params,
            )
            return inst
    raise GenerationError(
        f"connectivity retry limit exceeded ({CONNECTIVITY_RETRY_LIMIT} samples) for {params}"
    )


def community_colouring(inst: Instance) -> Colouring:
    """The colouring induced by ground-truth communities (always complete)."""
    return Colouring(inst.communities.copy(), inst.k)
