"""Hot numerical loops with a compiled backend and a numpy fallback.

The compiled extension is used when it imports.  Setting the environment
variable ``MLV_PURE_PYTHON=1`` forces the numpy fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("MLV_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-python backend requested")
    from . import _ckernels as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

ml_series = _impl.ml_series
laplace_sum = _impl.laplace_sum
lerch_series = _impl.lerch_series


def backend_module(name: str):
    """Return the kernel module for ``name`` in {"cython", "python"}."""
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


__all__ = ["BACKEND", "backend_module", "laplace_sum", "lerch_series", "ml_series"]
