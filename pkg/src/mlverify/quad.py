"""Double-exponential quadrature for complex integrands.

Finite intervals use tanh-sinh, half-lines use exp-sinh.  Each level halves
the step of the previous one and reuses its nodes, and the error estimate
is the difference between successive levels.  Two-dimensional integrals are
iterated.  All inner integrals at one outer level are computed as one
batch on a shared inner grid.
"""

from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, QuadratureError, SlowDecayWarning

_H0 = 0.25           # step of the window scan (level 2)
_FIRST_LEVEL = 2
_T_CAP = 7.0


@dataclass(frozen=True)
class QuadConfig:
    """Tolerances and depth limits for the quadrature engine."""

    rel_tol: float = 1e-8
    abs_tol: float = 1e-12
    max_level: int = 12
    outer_rel_tol: float = 1e-6
    transform: str = "tanh_sinh"
    raise_on_failure: bool = False

    def __post_init__(self):
        if not self.rel_tol >= 1e-14:
            raise DomainError("rel_tol must be >= 1e-14")
        if not self.outer_rel_tol >= 1e-14:
            raise DomainError("outer_rel_tol must be >= 1e-14")
        if self.abs_tol < 0:
            raise DomainError("abs_tol must be nonnegative")
        if not (_FIRST_LEVEL + 1 <= self.max_level <= 15):
            raise DomainError("max_level must lie in [3, 15]")
        if self.transform not in ("tanh_sinh", "exp_sinh"):
            raise DomainError(f"unknown transform {self.transform!r}")

    def level_cap(self) -> int:
        cap = self.max_level
        env = os.environ.get("MLV_QUAD_MAX_LEVEL")
        if env:
            try:
                cap = min(cap, int(env))
            except ValueError:
                pass
        return max(cap, _FIRST_LEVEL + 1)


@dataclass(frozen=True)
class ExpDecay:
    rate: float


@dataclass(frozen=True)
class AlgebraicDecay:
    power: float


@dataclass(frozen=True)
class SingularityHint:
    """Endpoint behaviour: f ~ (x-a)^p on the left, given decay on the right."""

    left_exponent: complex = 0.0
    right_decay: ExpDecay | AlgebraicDecay | None = None

    def __post_init__(self):
        if not complex(self.left_exponent).real > -1:
            raise DomainError("left endpoint singularity is not integrable "
                              "(needs Re(exponent) > -1)")


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err_estimate: float
    evaluations: int
    converged: bool
    level: int = 0


@dataclass(frozen=True)
class Axis:
    """One integration axis: [lower, upper] with ``upper = inf`` allowed."""

    lower: float
    upper: float = math.inf
    hint: SingularityHint = field(default_factory=SingularityHint)


# ---------------------------------------------------------------------------
# transforms

class _TanhSinh:
    def __init__(self, a: float, b: float):
        self.a, self.b = float(a), float(b)

    def nodes(self, t: np.ndarray):
        a, b = self.a, self.b
        ln = b - a
        y = 0.5 * np.pi * np.sinh(t)
        with np.errstate(over="ignore", under="ignore"):
            e = np.exp(-2.0 * np.abs(y))
            d = ln * e / (1.0 + e)
            x = np.where(t <= 0, a + d, b - d)
            w = ln * 0.5 * np.pi * np.cosh(t) * 2.0 * e / (1.0 + e) ** 2
        ok = (x > a) & (x < b) & (d > 0)
        return x, w, ok


class _ExpSinh:
    def __init__(self, a: float, scale: float = 1.0):
        self.a, self.scale = float(a), float(scale)

    def nodes(self, t: np.ndarray):
        with np.errstate(over="ignore", under="ignore"):
            d = self.scale * np.exp(0.5 * np.pi * np.sinh(t))
            x = self.a + d
            w = d * 0.5 * np.pi * np.cosh(t)
        ok = np.isfinite(x) & np.isfinite(w) & (x > self.a) & (d > 0)
        return x, w, ok


class _MappedExpSinh:
    # [a, b] -> (0, inf) via x = a + (b-a) y/(1+y), then exp-sinh in y
    def __init__(self, a: float, b: float):
        self.a, self.b = float(a), float(b)
        self.inner = _ExpSinh(0.0)

    def nodes(self, t: np.ndarray):
        y, wy, ok = self.inner.nodes(t)
        ln = self.b - self.a
        with np.errstate(over="ignore", invalid="ignore"):
            frac = np.where(np.isfinite(y), y / (1.0 + y), 1.0)
            x = self.a + ln * frac
            w = ln * wy / (1.0 + y) ** 2
        ok = ok & (x > self.a) & (x < self.b) & np.isfinite(w)
        return x, w, ok


# ---------------------------------------------------------------------------
# engine

@dataclass
class _EngineOut:
    values: np.ndarray
    errors: np.ndarray
    converged: np.ndarray
    evaluations: int
    level: int


RowFunc = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _engine(func: RowFunc, tr, nrows: int, rel_tol: float, abs_tol: float,
            max_level: int) -> _EngineOut:
    """Integrate ``nrows`` integrands that share one abscissa grid.

    ``func(rows, x)`` returns an array of shape (len(rows), len(x)).
    """
    all_rows = np.arange(nrows)
    evals = 0

    def call(rows, x):
        nonlocal evals
        evals += rows.size * x.size
        v = np.asarray(func(rows, x), dtype=complex)
        return np.broadcast_to(v, (rows.size, x.size))

    # centre node
    x0, w0, ok0 = tr.nodes(np.zeros(1))
    if not ok0[0]:
        raise QuadratureError("degenerate interval")
    v0 = call(all_rows, x0)
    if not np.all(np.isfinite(v0)):
        raise _nonfinite(float(x0[0]), v0[:, 0], all_rows)
    acc = w0[0] * v0[:, 0]
    mag = np.abs(acc)

    def thresholds():
        return np.minimum(abs_tol / 10.0, 1e-3 * rel_tol * np.maximum(mag, 1e-300))

    t_nodes = [0.0]
    contrib = [acc.copy()]
    sig = [0.0, 0.0]
    for sign in (-1.0, 1.0):
        k = 0
        small_run = 0
        stop = False
        while not stop:
            ks = np.arange(k + 1, k + 5, dtype=float)
            t = sign * _H0 * ks
            x, w, ok = tr.nodes(t)
            good = np.nonzero(ok)[0]
            vals = call(all_rows, x[good]) if good.size else np.empty((nrows, 0))
            col = 0
            for j in range(4):
                if not ok[j] or abs(t[j]) > _T_CAP:
                    stop = True
                    break
                fv = vals[:, col]
                col += 1
                if not np.all(np.isfinite(fv)):
                    if small_run > 0:
                        stop = True
                        break
                    raise _nonfinite(float(x[j]), fv, all_rows)
                c = w[j] * fv if w[j] != 0 else np.zeros(nrows, dtype=complex)
                t_nodes.append(float(t[j]))
                contrib.append(c)
                mag = np.maximum(mag, np.abs(c))
                if np.all(np.abs(c) < thresholds()):
                    small_run += 1
                else:
                    small_run = 0
                    sig[0 if sign < 0 else 1] = float(t[j])
                if small_run >= 3:
                    stop = True
                    break
            k += 4
    order = np.argsort(t_nodes, kind="stable")
    t_lo = min(t_nodes)
    t_hi = max(t_nodes)
    csum = np.sum(np.array(contrib)[order], axis=0)
    values = _H0 * csum
    errors = np.full(nrows, np.inf)
    converged = np.zeros(nrows, dtype=bool)
    level = _FIRST_LEVEL
    h = _H0
    for level in range(_FIRST_LEVEL + 1, max_level + 1):
        h *= 0.5
        active = np.nonzero(~converged)[0]
        if active.size == 0:
            level -= 1
            break
        n_lo = math.ceil((t_lo / h - 1) / 2)
        n_hi = math.floor((t_hi / h - 1) / 2)
        t = (2 * np.arange(n_lo, n_hi + 1) + 1) * h
        t = t[(t > t_lo) & (t < t_hi)]
        x, w, ok = tr.nodes(t)
        add = np.zeros(active.size, dtype=complex)
        good = np.nonzero(ok & (w > 0))[0]
        if good.size:
            vals = call(active, x[good])
            fin = np.isfinite(vals)
            if not np.all(fin):
                bad_cols = np.nonzero(~np.all(fin, axis=0))[0]
                tb = t[good][bad_cols]
                inside = (tb >= sig[0]) & (tb <= sig[1])
                if np.any(inside):
                    col = bad_cols[np.argmax(inside)]
                    raise _nonfinite(float(x[good][col]), vals[:, col], active)
                vals = np.where(fin, vals, 0.0)
            add = np.sum(vals * w[good][None, :], axis=1)
        csum[active] = csum[active] + add
        new = h * csum[active]
        err = np.abs(new - values[active])
        values[active] = new
        errors[active] = err
        tol = np.maximum(abs_tol, rel_tol * np.abs(new))
        converged[active] = err <= tol
    return _EngineOut(values, errors, converged, evals, level)


def _nonfinite(x: float, column: np.ndarray, rows: np.ndarray) -> QuadratureError:
    exc = QuadratureError(f"integrand is not finite at x = {x!r}", abscissa=x)
    bad = np.nonzero(~np.isfinite(column))[0]
    exc.row = int(rows[bad[0]]) if bad.size else None
    return exc


def _finite_transform(a: float, b: float, cfg: QuadConfig):
    if cfg.transform == "exp_sinh":
        return _MappedExpSinh(a, b)
    return _TanhSinh(a, b)


def _semiinf_transform(a: float, hint: SingularityHint | None):
    scale = 1.0
    if hint is not None and isinstance(hint.right_decay, ExpDecay) \
            and hint.right_decay.rate > 0:
        scale = min(max(1.0 / hint.right_decay.rate, 1e-3), 1e3)
    return _ExpSinh(a, scale)


def _check_hint(hint: SingularityHint | None):
    if hint is None:
        return
    rd = hint.right_decay
    if isinstance(rd, AlgebraicDecay) and rd.power >= -1.05:
        warnings.warn(f"algebraic decay power {rd.power} is too slow for "
                      "reliable semi-infinite quadrature", SlowDecayWarning,
                      stacklevel=3)


def _finish(out: _EngineOut, cfg: QuadConfig) -> QuadResult:
    res = QuadResult(complex(out.values[0]), float(out.errors[0]), out.evaluations,
                     bool(out.converged[0]), out.level)
    if cfg.raise_on_failure and not res.converged:
        raise QuadratureError(f"no convergence after {out.level} levels "
                              f"(estimate {res.err_estimate:.3g})")
    return res


def _as_rowfunc(f: Callable[[np.ndarray], np.ndarray]) -> RowFunc:
    def g(rows, x):
        return np.asarray(f(x), dtype=complex)[None, :]
    return g


def integrate_finite(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                     hint: SingularityHint | None = None,
                     cfg: QuadConfig | None = None) -> QuadResult:
    """Integrate ``f`` over [a, b].

    Parameters
    ----------
    f : callable
        Vectorized integrand taking a float array and returning complex values.
        It is only evaluated on the open interval.
    a, b : float
        Limits with a < b.
    hint : SingularityHint, optional
        Endpoint behaviour.  It is checked for integrability.
    cfg : QuadConfig, optional

    Returns
    -------
    QuadResult
    """
    cfg = cfg or QuadConfig()
    if not a < b:
        raise DomainError("integrate_finite needs a < b")
    out = _engine(_as_rowfunc(f), _finite_transform(a, b, cfg), 1, cfg.rel_tol,
                  cfg.abs_tol, cfg.level_cap())
    return _finish(out, cfg)


def integrate_semiinf(f: Callable[[np.ndarray], np.ndarray], a: float = 0.0,
                      hint: SingularityHint | None = None,
                      cfg: QuadConfig | None = None) -> QuadResult:
    """Integrate ``f`` over (a, inf) with the exp-sinh transform."""
    cfg = cfg or QuadConfig()
    _check_hint(hint)
    out = _engine(_as_rowfunc(f), _semiinf_transform(a, hint), 1, cfg.rel_tol,
                  cfg.abs_tol, cfg.level_cap())
    return _finish(out, cfg)


def _axis_transform(axis: Axis, cfg: QuadConfig):
    if math.isinf(axis.upper):
        _check_hint(axis.hint)
        return _semiinf_transform(axis.lower, axis.hint)
    if not axis.lower < axis.upper:
        raise DomainError("axis needs lower < upper")
    return _finite_transform(axis.lower, axis.upper, cfg)


def integrate_double(f: Callable[[np.ndarray, np.ndarray], np.ndarray],
                     inner: Axis, outer: Axis,
                     cfg: QuadConfig | None = None) -> QuadResult:
    """Iterated integral of f(x, u) du dx, with u inner and x outer.

    ``f`` receives ``x`` with shape (r, 1) and ``u`` with shape (1, n).
    It must broadcast to (r, n).  Inner integrals run at relative tolerance
    ``outer_rel_tol / 10``.  The reported error adds the outer level
    difference to the weighted inner error estimates.
    """
    cfg = cfg or QuadConfig()
    cap = cfg.level_cap()
    tr_in = _axis_transform(inner, cfg)
    tr_out = _axis_transform(outer, cfg)
    inner_rel = max(cfg.outer_rel_tol / 10.0, 1e-14)
    inner_abs = cfg.abs_tol / 10.0
    stats = {"evals": 0, "inner_ok": True, "inner_err": {}}

    def outer_rows(rows, xs):
        xs_col = np.asarray(xs, dtype=float)

        def g(irows, u):
            return f(xs_col[irows][:, None], np.asarray(u, dtype=float)[None, :])

        try:
            out = _engine(g, tr_in, xs_col.size, inner_rel, inner_abs, cap)
        except QuadratureError as exc:
            row = getattr(exc, "row", None)
            xo = float(xs_col[row]) if row is not None else None
            raise QuadratureError(f"inner integral failed at outer x = {xo!r}: {exc}",
                                  abscissa=exc.abscissa, outer_abscissa=xo) from exc
        stats["evals"] += out.evaluations
        if not np.all(out.converged):
            stats["inner_ok"] = False
        for xv, ev in zip(xs_col, out.errors):
            stats["inner_err"][float(xv)] = float(ev)
        return out.values[None, :]

    out = _engine(outer_rows, tr_out, 1, cfg.outer_rel_tol, cfg.abs_tol, cap)
    inner_bound = _weighted_inner_error(tr_out, stats["inner_err"], out.level)
    converged = bool(out.converged[0]) and stats["inner_ok"]
    res = QuadResult(complex(out.values[0]), float(out.errors[0]) + inner_bound,
                     stats["evals"] + out.evaluations, converged, out.level)
    if cfg.raise_on_failure and not res.converged:
        raise QuadratureError("2-D quadrature did not converge")
    return res


def _weighted_inner_error(tr, inner_err: dict, level: int) -> float:
    if not inner_err:
        return 0.0
    xs = np.array(sorted(inner_err))
    errs = np.array([inner_err[x] for x in xs])
    errs = np.where(np.isfinite(errs), errs, 0.0)
    # crude bound: trapezoid on the scattered outer nodes
    if xs.size < 2:
        return float(errs.sum())
    finite = np.isfinite(xs)
    xs, errs = xs[finite], errs[finite]
    return float(np.sum(0.5 * (errs[1:] + errs[:-1]) * np.diff(xs)))


def cached_on_grid(fn: Callable[[np.ndarray], np.ndarray], maxsize: int = 64):
    """Memoize a function of a 1-D grid keyed on the grid's bytes.

    Inner axes revisit identical node sets for every outer batch.  This
    lets expensive factors depending only on the inner variable be computed
    once per level.
    """
    store: dict[bytes, np.ndarray] = {}
    keys: list[bytes] = []

    def wrapped(u: np.ndarray) -> np.ndarray:
        u = np.ascontiguousarray(u, dtype=float)
        key = u.tobytes()
        hit = store.get(key)
        if hit is not None:
            return hit
        val = fn(u)
        store[key] = val
        keys.append(key)
        if len(keys) > maxsize:
            store.pop(keys.pop(0), None)
        return val

    return wrapped


def substitute_log(f: Callable[[np.ndarray], np.ndarray]) -> Callable[[np.ndarray], np.ndarray]:
    """Turn an integrand on (0, 1) into one on (0, inf) via x = exp(-y)."""
    def g(y):
        x = np.exp(-y)
        return f(x) * x
    return g


__all__ = [
    "AlgebraicDecay", "Axis", "ExpDecay", "QuadConfig", "QuadResult",
    "SingularityHint", "cached_on_grid", "integrate_double", "integrate_finite",
    "integrate_semiinf", "substitute_log",
]
