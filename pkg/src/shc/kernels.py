"""Dispatch layer over the numba and numpy kernel backends.

All solvers call through this module; ``set_backend`` swaps implementations
at runtime (used by the benchmark and the cross-backend tests).
"""
from __future__ import annotations

import numpy as np

from . import backend as _backend_mod


def _load(name: str):
    if name == "numba":
        from . import _kernels_numba as impl
    elif name == "numpy":
        from . import _kernels_numpy as impl
    else:
        raise ValueError(f"unknown backend {name!r}")
    return impl


_current_name = _backend_mod.default_backend()
_impl = _load(_current_name)


def current_backend() -> str:
    return _current_name


def set_backend(name: str) -> None:
    global _impl, _current_name
    _impl = _load(name)
    _current_name = name


def same_colour_counts(indptr, indices, colours) -> np.ndarray:
    """Per-vertex count of coloured neighbours sharing the vertex colour."""
    return _impl.same_colour_counts(indptr, indices, colours)


def ls_pass(indptr, indices, colours, k, u_arr) -> int:
    return _impl.ls_pass(indptr, indices, colours, k, u_arr)


def ls_drain(indptr, indices, colours, free_mask, need, k):
    return _impl.ls_drain(indptr, indices, colours, free_mask, need, k)


def els_chunk(indptr, indices, colours, need, k, u_arr, same_cnt, happy) -> int:
    return _impl.els_chunk(indptr, indices, colours, need, k, u_arr, same_cnt, happy)


def growth_chunk(indptr, indices, colours, cnt, unc, maxcnt, need, rand_colours, rand_pos, max_iters):
    return _impl.growth_chunk(
        indptr, indices, colours, cnt, unc, maxcnt, need, rand_colours, rand_pos, max_iters
    )


def lmc_run(indptr, indices, colours, k, rand_floats) -> int:
    return _impl.lmc_run(indptr, indices, colours, k, rand_floats)


def brute_force(indptr, indices, base_colours, free_verts, need, k):
    return _impl.brute_force(indptr, indices, base_colours, free_verts, need, k)


def warmup() -> None:
    """Trigger JIT compilation (or cache load) of every kernel on toy input."""
    indptr = np.array([0, 1, 2], dtype=np.int64)
    indices = np.array([1, 0], dtype=np.int32)
    colours = np.array([1, 0], dtype=np.int32)
    need = np.array([1, 1], dtype=np.int64)
    free = np.array([False, True])
    same_colour_counts(indptr, indices, colours)
    ls_pass(indptr, indices, colours.copy(), 2, np.array([1], dtype=np.int64))
    ls_drain(indptr, indices, colours.copy(), free, need, 2)
    sc = np.zeros(2, dtype=np.int64)
    hp = np.zeros(2, dtype=np.bool_)
    els_chunk(indptr, indices, colours.copy(), need, 2, np.array([1], dtype=np.int64), sc, hp)
    cnt = np.zeros((2, 3), dtype=np.int32)
    cnt[0, 1] = 0
    cnt[1, 1] = 1
    unc = np.array([1, 0], dtype=np.int64)
    maxcnt = np.array([0, 1], dtype=np.int64)
    growth_chunk(
        indptr, indices, colours.copy(), cnt, unc, maxcnt, need,
        np.array([1], dtype=np.int32), 0, 16,
    )
    lmc_run(indptr, indices, colours.copy(), 2, np.array([0.5]))
    brute_force(indptr, indices, colours.copy(), np.array([1], dtype=np.int64), need, 2)
