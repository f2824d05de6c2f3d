"""Immutable simple undirected graphs stored as CSR adjacency arrays."""
from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components


class GraphError(ValueError):
    """Raised when edge input violates the simple-graph contract."""


class Graph:
    """Vertices are 0..n-1; ``indices[indptr[v]:indptr[v+1]]`` is the sorted
    neighbour list of v. Instances are frozen after construction so they can
    be shared between concurrently running solvers.
    """

    __slots__ = ("n", "m", "indptr", "indices", "_degrees")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = int(n)
        self.m = int(indices.shape[0]) // 2
        self.indptr = indptr
        self.indices = indices
        self._degrees = np.diff(indptr).astype(np.int64)
        for arr in (self.indptr, self.indices, self._degrees):
            arr.setflags(write=False)

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def degree(self, v: int) -> int:
        return int(self._degrees[v])

    def neighbours(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def edge_array(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v, ascending lexicographic."""
        owner = np.repeat(np.arange(self.n, dtype=np.int64), self._degrees)
        keep = owner < self.indices
        return np.column_stack([owner[keep], self.indices[keep].astype(np.int64)])

    def half_edge_owners(self) -> np.ndarray:
        """Owner vertex of each CSR slot, aligned with ``indices``."""
        return np.repeat(np.arange(self.n, dtype=np.int64), self._degrees)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self):
        return hash((self.n, self.m, self.indices.tobytes()))


def build_graph(n: int, edges) -> Graph:
    """Build a Graph from unordered vertex pairs.

    Duplicate edges (in either orientation) collapse to one; self-loops and
    out-of-range endpoints are rejected, naming the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
    if pairs.shape[0] > 0:
        bad = (pairs < 0) | (pairs >= n)
        if bad.any():
            u, v = pairs[bad.any(axis=1)][0]
            raise GraphError(f"endpoint out of range: ({u}, {v}) with n={n}")
        loops = pairs[:, 0] == pairs[:, 1]
        if loops.any():
            u = pairs[loops][0][0]
            raise GraphError(f"self-loop rejected: ({u}, {u})")
    lo = np.minimum(pairs[:, 0], pairs[:, 1])
    hi = np.maximum(pairs[:, 0], pairs[:, 1])
    codes = np.unique(lo * n + hi) if pairs.shape[0] else np.empty(0, dtype=np.int64)
    lo, hi = codes // n, codes % n
    return from_sorted_unique_edges(n, lo, hi)


def from_sorted_unique_edges(n: int, lo: np.ndarray, hi: np.ndarray) -> Graph:
    """Assemble CSR from unique edges already normalized to lo < hi."""
    heads = np.concatenate([lo, hi])
    tails = np.concatenate([hi, lo])
    order = np.lexsort((tails, heads))
    heads, tails = heads[order], tails[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, heads + 1, 1)
    np.cumsum(indptr, out=indptr)
    return Graph(n, indptr, tails.astype(np.int32))


def is_connected(g: Graph) -> bool:
    """True iff a traversal from vertex 0 reaches every vertex (n <= 1: True)."""
    if g.n <= 1:
        return True
    if g.m == 0:
        return False
    mat = csr_matrix(
        (np.ones(g.indices.shape[0], dtype=np.int8), g.indices, g.indptr),
        shape=(g.n, g.n),
    )
    ncomp, _ = connected_components(mat, directed=False, return_labels=True)
    return int(ncomp) == 1


def component_labels(g: Graph) -> np.ndarray:
    """Connected-component label per vertex."""
    if g.n == 0:
        return np.empty(0, dtype=np.int64)
    mat = csr_matrix(
        (np.ones(g.indices.shape[0], dtype=np.int8), g.indices, g.indptr),
        shape=(g.n, g.n),
    )
    _, labels = connected_components(mat, directed=False, return_labels=True)
    return labels.astype(np.int64)


def neighbour_colour_counts(g: Graph, colouring, v: int) -> dict[int, int]:
    """Map colour -> count over the coloured neighbours of v."""
    if v < 0 or v >= g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    nb_colours = colouring.assignment[g.neighbours(v)]
    nb_colours = nb_colours[nb_colours > 0]
    if nb_colours.size == 0:
        return {}
    counts = np.bincount(nb_colours)
    return {int(c): int(counts[c]) for c in np.nonzero(counts)[0]}
