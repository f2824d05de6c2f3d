"""Kernel backend selection.

The hot inner loops ship in two functionally identical versions: numba
JIT-compiled kernels (default when numba imports) and a pure numpy/python
fallback. Set ``SHC_BACKEND=numpy`` or ``SHC_BACKEND=numba`` to force one.
"""
from __future__ import annotations

import os

ENV_VAR = "SHC_BACKEND"
BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice in ("numpy", "python", "py"):
        return "numpy"
    if choice == "numba":
        return "numba"
    if choice:
        raise ValueError(
            f"unknown {ENV_VAR}={choice!r}; expected one of {BACKENDS}"
        )
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"
