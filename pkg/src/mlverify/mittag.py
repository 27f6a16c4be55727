"""Two-parameter Mittag-Leffler function E_{alpha,beta}(z)."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .complexfn import log_gamma, rgamma, sinpi
from .errors import AccuracyWarning, ConvergenceError, DomainError

SWITCH_RADIUS = 1.0      # series for |z| <= this, kernel/asymptotic routes beyond
ASYMPTOTIC_T = 45.0      # t = x^(1/alpha) from which the asymptotic series is used
CANCELLATION_LIMIT = 1e6
SERIES_LOSS_LIMIT = 4.0  # nats; beyond this the contour route replaces the series


@dataclass(frozen=True)
class MLParams:
    """Parameters (alpha, beta) of E_{alpha,beta}."""

    alpha: float
    beta: complex = 1.0

    def __post_init__(self):
        a = complex(self.alpha)
        if a.imag != 0 or not a.real > 0:
            raise DomainError("Mittag-Leffler alpha must be real and positive")
        object.__setattr__(self, "alpha", float(a.real))
        object.__setattr__(self, "beta", complex(self.beta))


# ---------------------------------------------------------------------------
# power series

def _log_rgamma(args: np.ndarray) -> np.ndarray:
    out = np.empty_like(args)
    right = args.real >= 1.0
    out[right] = -log_gamma(args[right])
    if np.any(~right):
        with np.errstate(divide="ignore"):
            out[~right] = np.log(rgamma(args[~right]).astype(complex))
    return out


@lru_cache(maxsize=256)
def _series_coeffs(alpha: float, beta: complex, rmax_log: float) -> np.ndarray:
    # extend until the log-term is far below the peak and decreasing
    chunk = 64
    coeffs = []
    f0 = 0
    peak = -np.inf
    while True:
        f = np.arange(f0, f0 + chunk, dtype=float)
        c = _log_rgamma(alpha * f + beta)
        coeffs.append(c)
        logterm = f * rmax_log + c.real
        finite = logterm[np.isfinite(logterm)]
        if finite.size:
            peak = max(peak, float(finite.max()))
        last = logterm[-1]
        if np.isfinite(last) and last < peak - 60.0 and last < logterm[-2]:
            break
        f0 += chunk
        if f0 > 200000:
            raise ConvergenceError("Mittag-Leffler series needs too many terms")
    return np.concatenate(coeffs)


def ml_series(params: MLParams, z) -> np.ndarray:
    """Taylor series with compensated summation.

    Emits ``AccuracyWarning`` when the sum of term moduli exceeds the result
    by more than ``CANCELLATION_LIMIT``.
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if z.size == 0:
        return z
    rmax = float(np.max(np.abs(z)))
    rmax_log = math.log(max(rmax, 1e-3))
    rmax_log = math.ceil(rmax_log * 8) / 8  # coarse key for the coefficient cache
    logc = _series_coeffs(params.alpha, params.beta, rmax_log)
    sums, absums = _kernels.ml_series(z, logc)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = absums / np.abs(sums)
    if np.any(ratio > CANCELLATION_LIMIT):
        warnings.warn(f"Mittag-Leffler series lost about {math.log10(float(np.nanmax(ratio))):.0f}"
                      " digits to cancellation", AccuracyWarning, stacklevel=3)
    return sums


# ---------------------------------------------------------------------------
# negative real axis: collapsed Hankel contour

@lru_cache(maxsize=128)
def _kernel_grid(alpha: float, beta: complex, h: float):
    """Nodes rho_i and weights W_i with E(-x) = t^{1-beta} sum W_i exp(-t rho_i).

    The weights are the jump of sigma^{alpha-beta}/(sigma^alpha+1) across
    the negative axis, over 2 pi i, times the exp-sinh Jacobian and step h.
    """
    expo = 1.0 + (alpha - beta).real
    log_lo = -46.0 / max(expo, 0.05)
    log_lo = max(log_lo, -700.0)
    s_lo = -math.asinh(-log_lo * 2.0 / math.pi)
    s_hi = math.asinh(math.log(46.0 / 0.5) * 2.0 / math.pi)
    n_lo = math.floor(s_lo / h)
    n_hi = math.ceil(s_hi / h)
    s = np.arange(n_lo, n_hi + 1) * h
    rho = np.exp(0.5 * np.pi * np.sinh(s))
    jac = rho * 0.5 * np.pi * np.cosh(s)
    lr = np.log(rho)
    small = rho <= 1.0
    jump = np.zeros(s.shape, dtype=complex)
    for sign in (-1.0, 1.0):
        ph_num = np.exp(1j * sign * np.pi * (alpha - beta))
        ph_den = np.exp(1j * sign * np.pi * alpha)
        num = np.where(small, np.exp((alpha - beta) * lr), np.exp(-beta * lr)) * ph_num
        den = np.where(small, np.exp(alpha * lr) * ph_den + 1.0, ph_den + np.exp(-alpha * lr))
        # g(rho e^{-i pi}) - g(rho e^{+i pi})
        jump += -sign * num / den
    weights = h * jac * jump / (2j * np.pi)
    return rho, weights


def _residues(alpha: float, beta: complex, t: np.ndarray) -> np.ndarray:
    out = np.zeros(t.shape, dtype=complex)
    if alpha > 1.0:
        for sign in (-1.0, 1.0):
            sig = np.exp(1j * sign * np.pi / alpha)
            out += np.exp(t * sig) * sig ** (1.0 - beta) / alpha
    return out


def _kernel_route(alpha: float, beta: complex, x: np.ndarray) -> np.ndarray:
    t = x ** (1.0 / alpha)
    prev = None
    h = 1.0 / 8
    while True:
        rho, w = _kernel_grid(alpha, beta, h)
        cur = _kernels.laplace_sum(t, rho, w)
        if prev is not None:
            diff = np.abs(cur - prev)
            if np.all(diff <= 1e-14 * np.maximum(np.abs(cur), 1e-300)) or h < 1.0 / 512:
                break
        prev = cur
        h *= 0.5
    pow_t = np.exp((1.0 - beta) * np.log(t))
    return pow_t * (cur + _residues(alpha, beta, t))


# ---------------------------------------------------------------------------
# general complex argument: Hankel contour with rays at angle +-theta

_THETAS = (math.pi, 0.8 * math.pi, 0.65 * math.pi)
_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_legendre(n: int):
    if n not in _GL_CACHE:
        _GL_CACHE[n] = np.polynomial.legendre.leggauss(n)
    return _GL_CACHE[n]


def _pole_angles(alpha: float, phi: np.ndarray) -> np.ndarray:
    # arguments of the sigma-plane poles sigma^alpha = e^{i phi}, one row per branch
    return np.stack([(phi + 2.0 * np.pi * k) / alpha for k in (-1, 0, 1)])


def _pick_theta(alpha: float, phi: np.ndarray) -> np.ndarray:
    """Ray angle per point keeping the rays clear of every pole."""
    ang = np.abs(_pole_angles(alpha, phi))
    best = np.full(phi.shape, _THETAS[0])
    best_gap = np.min(np.abs(ang - _THETAS[0]), axis=0)
    for th in _THETAS[1:]:
        gap = np.min(np.abs(ang - th), axis=0)
        better = (best_gap < 0.3) & (gap > best_gap)
        best = np.where(better, th, best)
        best_gap = np.where(better, gap, best_gap)
    return best


def _contour_sum(alpha, beta, t, phi, theta, eps, h, n_arc):
    """(1/2 pi i) of the rays plus arc, in the scaled variable sigma = s / t."""
    t, phi, theta, eps = (a[:, None] for a in (t, phi, theta, eps))
    eiphi = np.exp(1j * phi)
    u_lo = -math.asinh(2.0 / math.pi * 60.0)
    # e^{t rho cos theta} with |cos theta| >= 0.45 is below e^-80 past this rho
    u_hi = math.asinh(2.0 / math.pi * math.log(80.0 / (0.45 * float(np.min(t))) + 1.0))
    u = np.arange(math.floor(u_lo / h), math.ceil(u_hi / h) + 1) * h
    d = np.exp(0.5 * np.pi * np.sinh(u))[None, :]
    jac = d * 0.5 * np.pi * np.cosh(u)[None, :]
    rho = eps + d
    lr = np.log(rho)
    rays = np.zeros(rho.shape, dtype=complex)
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        for sign in (1.0, -1.0):
            e_th = np.exp(1j * sign * theta)
            num = np.exp(t * rho * e_th + (alpha - beta) * (lr + 1j * sign * theta)) * e_th
            den = np.exp(alpha * (lr + 1j * sign * theta)) - eiphi
            rays += sign * num / den
        rays = np.where(np.isfinite(rays), rays, 0.0)
    ray_part = h * np.sum(jac * rays, axis=1) / (2j * np.pi)
    x, w = _gauss_legendre(n_arc)
    psi = theta * x[None, :]
    sig = eps * np.exp(1j * psi)
    la = np.log(eps) + 1j * psi
    arc = np.exp(t * sig + (alpha - beta) * la) * 1j * sig / (np.exp(alpha * la) - eiphi)
    arc_part = np.sum(w[None, :] * arc, axis=1) * theta[:, 0] / (2j * np.pi)
    return ray_part + arc_part


def _contour_route(alpha: float, beta: complex, z: np.ndarray) -> np.ndarray:
    """E_{alpha,beta}(z) for 0 < alpha < 2 and z != 0 off the positive reals.

    E = t^{1-beta} (residues + integral over the deformed Hankel contour),
    with t = |z|^(1/alpha).  The poles sit on |sigma| = 1; the rays start on
    a small arc of radius min(1/2, 1/t) and run at +-theta.
    """
    r = np.abs(z)
    phi = np.angle(z)
    t = np.exp(np.log(r) / alpha)
    theta = _pick_theta(alpha, phi)
    eps = np.minimum(0.5, 1.0 / t)
    res = np.zeros(z.shape, dtype=complex)
    for ang in _pole_angles(alpha, phi):
        inside = np.abs(ang) < theta
        e_ang = np.exp(1j * ang)
        res += np.where(inside, np.exp(t * e_ang + 1j * ang * (1.0 - beta)) / alpha, 0.0)
    out = np.empty(z.shape, dtype=complex)
    for lo in range(0, z.size, 256):
        sl = slice(lo, lo + 256)
        h, n_arc = 1.0 / 8, 32
        prev = _contour_sum(alpha, beta, t[sl], phi[sl], theta[sl], eps[sl], h, n_arc)
        while True:
            h, n_arc = h / 2, 2 * n_arc
            cur = _contour_sum(alpha, beta, t[sl], phi[sl], theta[sl], eps[sl], h, n_arc)
            scale = np.maximum(np.abs(cur + res[sl]), 1e-300)
            if np.all(np.abs(cur - prev) <= 1e-14 * scale) or h < 1.0 / 256:
                break
            prev = cur
        out[sl] = cur + res[sl]
    return np.exp((1.0 - beta) * np.log(t)) * out


def _series_loss(alpha: float, z: np.ndarray) -> np.ndarray:
    """Predicted nats lost to cancellation by the Taylor series at z."""
    t = np.exp(np.log(np.abs(z)) / alpha)
    phi = np.angle(z)
    grow = np.where(np.abs(phi) < alpha * np.pi, t * np.cos(phi / alpha), -np.inf)
    size = np.maximum(grow, -np.log(np.abs(z)))
    return t - size


def _asymptotic_terms(alpha: float, beta: complex, x: np.ndarray):
    """Optimally truncated sum_{n>=1} (-1)^{n+1} x^{-n}/Gamma(beta - alpha n).

    Truncation is steered by the envelope x^{-n} |Gamma(1 - beta + alpha n)|/pi.
    The sine factor of the reflection formula is left out, so near-pole dips
    in individual terms do not stop the sum early.
    """
    total = np.zeros(x.shape, dtype=complex)
    bound = np.full(x.shape, np.inf)
    active = np.ones(x.shape, dtype=bool)
    last = np.full(x.shape, np.inf)
    logx = np.log(x)
    for n in range(1, 4000):
        rg = complex(rgamma(beta - alpha * n))
        term = (-1.0) ** (n + 1) * rg * np.exp(-n * logx)
        arg = 1.0 - beta + alpha * n
        if arg.real > 0:
            env = np.exp(-n * logx + log_gamma(arg).real) / np.pi
        else:
            env = np.abs(term)
        grow = active & (env > last)
        bound[grow] = last[grow]
        active &= ~grow
        total[active] += term[active]
        small = active & (env <= 1e-17 * np.abs(total))
        bound[small] = env[small]
        active &= ~small
        last = env
        if not np.any(active):
            break
    bound[active] = last[active]
    return total, bound


def _asymptotic_route(alpha: float, beta: complex, x: np.ndarray):
    total, bound = _asymptotic_terms(alpha, beta, x)
    if alpha > 1.0:
        # pole terms decay like exp(t cos(pi/alpha)); beyond overflow they are 0
        logt = np.log(x) / alpha
        ok = logt < 700.0
        t = np.exp(logt[ok])
        total[ok] += _residues(alpha, beta, t) * np.exp((1.0 - beta) * logt[ok])
    return total, bound


def _negreal(alpha: float, beta: complex, x: np.ndarray) -> np.ndarray:
    """E_{alpha,beta}(-x) for x > SWITCH_RADIUS and alpha in (0,1) U (1,2)."""
    if beta.real >= 1.0 + alpha:
        # E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z
        inner = _negreal(alpha, beta - alpha, x)
        return (inner - complex(rgamma(beta - alpha))) / (-x)
    out = np.empty(x.shape, dtype=complex)
    far = np.log(x) >= alpha * np.log(ASYMPTOTIC_T)
    if np.any(far):
        out[far], _ = _asymptotic_route(alpha, beta, x[far])
    if np.any(~far):
        out[~far] = _kernel_route(alpha, beta, x[~far])
    return out


def ml(params: MLParams, z):
    """Mittag-Leffler function E_{alpha,beta}(z).

    Parameters
    ----------
    params : MLParams
    z : complex or array_like

    Returns
    -------
    complex or ndarray

    Notes
    -----
    Closed forms cover (1, 1) and (2, 1).  The compensated Taylor series
    serves |z| <= SWITCH_RADIUS and larger arguments where it cancels
    little.  On the negative real axis with 0 < alpha < 2, alpha != 1, the
    collapsed Hankel integral is used, or its asymptotic expansion once
    x^(1/alpha) >= ASYMPTOTIC_T.  Other arguments whose series would lose
    more than SERIES_LOSS_LIMIT nats go through a deformed Hankel contour.
    """
    zarr = np.asarray(z, dtype=complex)
    scalar = zarr.ndim == 0
    zarr = np.atleast_1d(zarr)
    alpha, beta = params.alpha, params.beta
    out = np.empty(zarr.shape, dtype=complex)
    flat = zarr.reshape(-1)
    res = out.reshape(-1)
    if alpha == 1.0 and beta == 1.0:
        res[:] = np.exp(flat)
    elif alpha == 2.0 and beta == 1.0:
        res[:] = np.cosh(np.sqrt(flat))
    else:
        neg = (flat.imag == 0) & (flat.real < -SWITCH_RADIUS)
        if 0 < alpha < 2 and alpha != 1.0:
            kern = neg
        else:
            kern = np.zeros_like(neg)
        rest = ~kern
        if alpha == 1.0 and beta.imag == 0 and beta.real == round(beta.real) \
                and beta.real >= 2:
            big = rest & (np.abs(flat) > SWITCH_RADIUS)
            if np.any(big):
                res[big] = _exp_recurrence(int(beta.real), flat[big])
            rest &= ~big
        if np.any(kern):
            vals = _negreal(alpha, beta, -flat[kern].real)
            if beta.imag == 0:
                vals = vals.real + 0j
            res[kern] = vals
        if 0 < alpha < 2 and np.any(rest):
            cand = rest & (np.abs(flat) > SWITCH_RADIUS)
            if np.any(cand):
                idx = np.nonzero(cand)[0]
                bad = _series_loss(alpha, flat[idx]) > SERIES_LOSS_LIMIT
                idx = idx[bad]
                if idx.size:
                    res[idx] = _contour_route(alpha, beta, flat[idx])
                    rest[idx] = False
        if np.any(rest):
            res[rest] = ml_series(params, flat[rest])
    return complex(out.reshape(-1)[0]) if scalar else out


def _exp_recurrence(n: int, z: np.ndarray) -> np.ndarray:
    # E_{1,n}(z) = (e^z - sum_{k<n-1} z^k/k!) / z^{n-1}
    poly = np.zeros_like(z)
    term = np.ones_like(z)
    for k in range(n - 1):
        if k > 0:
            term = term * z / k
        poly = poly + term
    return (np.exp(z) - poly) / z ** (n - 1)


def mittag_leffler(alpha: float, beta: complex, z):
    """Shorthand for ``ml(MLParams(alpha, beta), z)``."""
    return ml(MLParams(alpha, beta), z)


def ml_neg_kernel(params: MLParams, x) -> np.ndarray:
    """E_{alpha,beta}(-x) from the contour integral alone (cross-check route)."""
    alpha, beta = params.alpha, params.beta
    if not (0 < alpha < 2 and alpha != 1.0):
        raise DomainError("contour route needs 0 < alpha < 2, alpha != 1")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x <= 0):
        raise DomainError("contour route needs x > 0")
    if beta.real >= 1.0 + alpha:
        inner = ml_neg_kernel(MLParams(alpha, beta - alpha), x)
        return (inner - complex(rgamma(beta - alpha))) / (-x)
    return _kernel_route(alpha, beta, x)


def ml_deriv_free_tail(params: MLParams, u: float, tol: float = 1e-12):
    """Large-u tail of E_alpha(-u) from the optimally truncated asymptotic series.

    Returns ``(value, bound)``, where ``bound`` is the first omitted term.
    For alpha = 1 the exact e^{-u} is returned with bound 0.

    Raises
    ------
    ConvergenceError
        If the truncation bound exceeds ``tol`` times the value.
    """
    alpha, beta = params.alpha, params.beta
    if not (0 < alpha <= 1) or beta != 1:
        raise DomainError("tail expansion needs 0 < alpha <= 1 and beta = 1")
    u = float(u)
    if not u > 0:
        raise DomainError("tail expansion needs u > 0")
    if alpha == 1.0:
        return math.exp(-u), 0.0
    total, bound = _asymptotic_terms(alpha, beta, np.array([u]))
    value = float(total[0].real)
    b = float(bound[0])
    if not b <= tol * abs(value):
        raise ConvergenceError(f"asymptotic tail bound {b:.3g} exceeds tolerance "
                               f"at u = {u}")
    return value, b


def mellin_ml_neg(s, b: float) -> complex:
    """Mellin transform of E_b(-u): Gamma(s) Gamma(1-s) / Gamma(1 - b s)."""
    s = complex(s)
    if not (0 < s.real < 1):
        raise DomainError("Mellin transform of E_b(-u) needs 0 < Re(s) < 1")
    if not b > 0:
        raise DomainError("Mellin transform of E_b(-u) needs b > 0")
    return complex(np.pi / sinpi(s) * rgamma(1.0 - b * s))


__all__ = [
    "MLParams", "ml", "ml_deriv_free_tail", "ml_neg_kernel", "ml_series",
    "mellin_ml_neg", "mittag_leffler",
]
