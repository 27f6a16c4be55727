"""Adaptive truncation of multiple series on index grids."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..errors import TruncationError

START = 40
CAP = 2 ** 14
_MAX_CELLS = 2 ** 22


@dataclass(frozen=True)
class SumAxis:
    """``size`` fixes the number of terms; ``asymptotic`` truncates each line
    of the axis just before its smallest term instead of requiring decay."""

    size: int | None = None
    asymptotic: bool = False


def _truncate_at_min(t: np.ndarray, axis: int):
    """Zero each line from its smallest term on; report lines whose minimum
    sits at the last index together with that minimum."""
    mag = np.abs(t)
    # exact zeros (parity-restricted sums) never mark the turning point
    mag = np.where(np.isfinite(mag) & (mag > 0), mag, np.inf)
    stop = np.argmin(mag, axis=axis)
    shape = [1] * t.ndim
    shape[axis] = -1
    keep = np.arange(t.shape[axis]).reshape(shape) < np.expand_dims(stop, axis)
    edge_min = np.min(mag, axis=axis)
    edge_min = np.where((stop == t.shape[axis] - 1) & np.isfinite(edge_min), edge_min, 0.0)
    return np.where(keep, t, 0), edge_min


def adaptive_sum(term: Callable[..., np.ndarray], axes: Sequence[SumAxis],
                 tol: float, start: int = START, cap: int = CAP) -> complex:
    """Sum ``term(i0, i1, ...)`` over a growing rectangular index grid.

    Each free axis starts at ``start`` terms and doubles until the last
    half-block contributes less than ``tol / 10`` relative to the total.
    Raises TruncationError when an axis reaches ``cap`` unsettled or when
    a term is not finite.
    """
    sizes = [a.size if a.size is not None else start for a in axes]
    asym = [i for i, a in enumerate(axes) if a.asymptotic]
    if len(asym) > 1:
        raise ValueError("at most one asymptotic axis")
    while True:
        if int(np.prod(sizes)) > _MAX_CELLS:
            raise TruncationError(f"index grid {sizes} exceeds the working limit")
        grids = np.meshgrid(*[np.arange(n, dtype=float) for n in sizes],
                            indexing="ij", sparse=True)
        with np.errstate(all="ignore"):
            t = np.broadcast_to(np.asarray(term(*grids), dtype=complex), sizes)
        edge_min = None
        if asym:
            t, edge_min = _truncate_at_min(t, asym[0])
        if not np.all(np.isfinite(t)):
            raise TruncationError("series term overflowed or is undefined")
        total = complex(t.sum())
        scale = max(abs(total), 1e-300)
        grow = [False] * len(axes)
        for i, a in enumerate(axes):
            if a.size is not None or sizes[i] < 2:
                continue
            if a.asymptotic:
                grow[i] = bool(edge_min.sum() > tol / 10 * scale)
                continue
            tail = np.take(t, np.arange(sizes[i] // 2, sizes[i]), axis=i)
            grow[i] = bool(np.abs(tail).sum() > tol / 10 * scale)
        if not any(grow):
            return total
        for i, g in enumerate(grow):
            if g:
                if sizes[i] >= cap:
                    raise TruncationError(f"axis {i} did not settle within {cap} terms")
                sizes[i] = min(2 * sizes[i], cap)


def log_power(base: complex, n: np.ndarray) -> np.ndarray:
    """n * Log(base) with the convention 0**0 = 1 (result 0 at n = 0)."""
    base = complex(base)
    if base == 0:
        return np.where(n == 0, 0.0, -np.inf)
    return n * np.log(base)
