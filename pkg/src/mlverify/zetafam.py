"""Hurwitz-Lerch family: Lerch transcendent, Hurwitz zeta, polylogarithm,
generalized Stieltjes constants and Cauchy-circle parameter derivatives."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from . import _kernels
from .complexfn import rgamma
from .errors import ConvergenceError, DomainError, PoleError, RegionError
from .quad import ExpDecay, QuadConfig, SingularityHint, integrate_semiinf

_SERIES_RADIUS = 0.95
_MAX_TERMS = 1_000_000


@dataclass(frozen=True)
class LerchArgs:
    z: complex
    s: complex
    v: complex

    def region(self) -> str:
        z, s, v = complex(self.z), complex(self.s), complex(self.v)
        if abs(z) < 1 - 1e-9:
            return "series"
        if abs(z) <= 1 + 1e-12 and z != 1 and s.real > 0 and v.real > 0:
            return "integral"
        return "boundary"


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials

@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n as exact fractions (B_1 = -1/2)."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = -out[1]
    return tuple(out)


def bernoulli_poly(n: int, x):
    """Bernoulli polynomial B_n(x) evaluated by Horner's rule."""
    b = bernoulli_numbers(n)
    x = np.asarray(x, dtype=complex)
    acc = np.zeros_like(x)
    for k in range(n + 1):
        acc = acc * x + math.comb(n, k) * float(b[k])
    if acc.ndim == 0:
        return complex(acc)
    return acc


_B2K = np.array([float(b) for b in bernoulli_numbers(40)[2::2]])  # B_2, B_4, ...


def _is_nonpos_int(s: complex) -> bool:
    return s.imag == 0 and s.real <= 0 and s.real == round(s.real)


# ---------------------------------------------------------------------------
# Hurwitz zeta

def hurwitz_zeta(s, a):
    """Hurwitz zeta function zeta(s, a).

    Parameters
    ----------
    s : complex
        Order, s != 1.
    a : complex or array_like
        Shift with Re a > 0.

    Returns
    -------
    complex or ndarray

    Notes
    -----
    Nonpositive integer orders use -B_{n+1}(a)/(n+1).  Other orders use
    Euler-Maclaurin summation after 20 + |s| explicit terms.
    """
    s = complex(s)
    a_arr = np.asarray(a, dtype=complex)
    scalar = a_arr.ndim == 0
    a_arr = np.atleast_1d(a_arr)
    if s == 1:
        raise PoleError("hurwitz_zeta has a pole at s = 1", 1)
    if _is_nonpos_int(s):
        n = int(-s.real)
        out = -np.asarray(bernoulli_poly(n + 1, a_arr)) / (n + 1)
        return complex(out[0]) if scalar else out
    if np.any(a_arr.real <= 0):
        raise DomainError("hurwitz_zeta requires Re(a) > 0")
    big_n = 20 + int(math.ceil(abs(s)))
    n = np.arange(big_n, dtype=float)[:, None]
    head = np.sum(np.exp(-s * np.log(a_arr[None, :] + n)), axis=0)
    w = a_arr + big_n
    logw = np.log(w)
    tail = np.exp((1 - s) * logw) / (s - 1) + 0.5 * np.exp(-s * logw)
    # sum_k B_2k/(2k)! (s)_{2k-1} w^{-s-2k+1}
    poch = s
    wpow = np.exp(-(s + 1) * logw)
    winv2 = 1.0 / (w * w)
    fact = 2.0
    corr = np.zeros_like(w)
    for k in range(1, len(_B2K) + 1):
        term = _B2K[k - 1] / fact * poch * wpow
        corr = corr + term
        if np.all(np.abs(term) <= 1e-17 * np.abs(head + tail + corr)):
            break
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        fact *= (2 * k + 1) * (2 * k + 2)
        wpow = wpow * winv2
    out = head + tail + corr
    return complex(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# Lerch transcendent

def _eulerian_li_neg(j: int, z: complex) -> complex:
    """sum_{n>=0} n^j z^n for |z| <= 1, z != 1 (0^0 = 1)."""
    if j == 0:
        return 1.0 / (1.0 - z)
    # Eulerian numbers A(j, i)
    row = [1]
    for n in range(2, j + 1):
        new = [0] * n
        for i in range(n):
            left = row[i - 1] if i - 1 >= 0 else 0
            mid = row[i] if i < len(row) else 0
            new[i] = (i + 1) * mid + (n - i) * left
        row = new
    poly = sum(c * z ** i for i, c in enumerate(row))
    return z * poly / (1.0 - z) ** (j + 1)


def _lerch_negint(z: complex, k: int, v: np.ndarray) -> np.ndarray:
    # Phi(z, -k, v) = sum_j C(k, j) v^{k-j} Li_{-j}(z)
    out = np.zeros_like(v)
    for j in range(k + 1):
        out = out + math.comb(k, j) * v ** (k - j) * _eulerian_li_neg(j, z)
    return out


def _lerch_integral(z: complex, s: complex, v: complex, cfg: QuadConfig) -> complex:
    def f(t):
        # 1 - z e^{-t} written to stay accurate when z is close to 1
        den = (1.0 - z) - z * np.expm1(-t)
        return np.exp((s - 1.0) * np.log(t) - v * t) / den

    hint = SingularityHint(s - 1.0, ExpDecay(max(v.real, 1e-3)))
    res = integrate_semiinf(f, 0.0, hint, cfg)
    if not res.converged:
        raise ConvergenceError("Lerch integral representation did not converge")
    return res.value * rgamma(s)


_LERCH_QUAD = QuadConfig(rel_tol=1e-13, abs_tol=0.0, max_level=12)


def lerch_phi(z, s=None, v=None):
    """Lerch transcendent Phi(z, s, v) = sum_n z^n (v+n)^{-s}.

    Accepts either a ``LerchArgs`` or the three arguments.  ``v`` may be an
    array.  The direct series serves |z| < 0.95.  A finite polynomial form
    serves nonpositive integer s with |z| <= 1.  Otherwise the integral
    representation serves |z| <= 1, z != 1, Re s > 0, Re v > 0.
    """
    if isinstance(z, LerchArgs):
        z, s, v = z.z, z.s, z.v
    z, s = complex(z), complex(s)
    v_arr = np.asarray(v, dtype=complex)
    scalar = v_arr.ndim == 0
    v_arr = np.atleast_1d(v_arr)
    if np.any((v_arr.imag == 0) & (v_arr.real <= 0) & (v_arr.real == np.round(v_arr.real))) \
            and not _is_nonpos_int(s):
        raise PoleError("Lerch series has a pole at v = 0, -1, -2, ...")
    out = None
    if _is_nonpos_int(s) and abs(z) <= 1 + 1e-12 and z != 1:
        out = _lerch_negint(z, int(-s.real), v_arr)
    elif abs(z) < _SERIES_RADIUS:
        out, used = _kernels.lerch_series(z, s, v_arr, 1e-17, _MAX_TERMS)
        if used >= _MAX_TERMS:
            out = None
    if out is None:
        if abs(z) <= 1 + 1e-12 and z != 1 and s.real > 0 and np.all(v_arr.real > 0):
            out = np.array([_lerch_integral(z, s, complex(vi), _LERCH_QUAD)
                            for vi in v_arr])
        elif abs(z) < 1 - 1e-9:
            out, used = _kernels.lerch_series(z, s, v_arr, 1e-17, _MAX_TERMS)
            if used >= _MAX_TERMS:
                raise ConvergenceError("Lerch series did not converge in 1e6 terms")
        else:
            raise RegionError("Lerch transcendent requested outside the series "
                              "and integral regions")
    return complex(out[0]) if scalar else out


def lerch_phi_integral(z, s, v, cfg: QuadConfig | None = None) -> complex:
    """Phi from its integral representation alone (for cross-checks)."""
    z, s, v = complex(z), complex(s), complex(v)
    if not (abs(z) <= 1 + 1e-12 and z != 1 and s.real > 0 and v.real > 0):
        raise RegionError("integral representation needs |z|<=1, z!=1, Re s>0, Re v>0")
    return _lerch_integral(z, s, v, cfg or _LERCH_QUAD)


def lerch_phi_series(z, s, v) -> complex:
    """Phi from the direct series alone (for cross-checks)."""
    z, s = complex(z), complex(s)
    if abs(z) >= 1:
        raise RegionError("series needs |z| < 1")
    out, used = _kernels.lerch_series(z, s, np.atleast_1d(np.asarray(v, dtype=complex)),
                                      1e-17, _MAX_TERMS)
    if used >= _MAX_TERMS:
        raise ConvergenceError("Lerch series did not converge in 1e6 terms")
    return complex(out[0])


def polylog(s, z):
    """Polylogarithm Li_s(z) = z Phi(z, s, 1)."""
    z = complex(z)
    if z == 0:
        return 0j
    s = complex(s)
    if abs(z) >= 1 and s.real <= 1 and not _is_nonpos_int(s):
        if abs(z) > 1 or s.real <= 0:
            raise RegionError("polylog needs |z| < 1 for Re(s) <= 1")
    return z * lerch_phi(z, s, 1.0)


# ---------------------------------------------------------------------------
# parameter derivatives

def s_derivative(f: Callable[[complex], object], s0, order: int = 1,
                 radius: float = 0.05, nodes: int = 64,
                 singularities: Sequence[complex] = (), tol: float = 1e-9):
    """Derivative of an analytic function by trapezoidal Cauchy integration.

    Parameters
    ----------
    f : callable
        Analytic in a disc around ``s0``.  It may return an array, which
        is differentiated elementwise.
    s0 : complex
        Expansion point.
    order : int
        Derivative order, at least 1.
    radius : float
        Circle radius.  It shrinks to half the distance to the nearest
        listed singularity.
    nodes : int
        Node count N.  The result is checked against 2N nodes.
    tol : float
        Allowed relative change between the N and 2N estimates.

    Raises
    ------
    ConvergenceError
        If doubling the node count changes the result by more than ``tol``.
    """
    if order < 1 or int(order) != order:
        raise DomainError("order must be a positive integer")
    s0 = complex(s0)
    r = float(radius)
    for p in singularities:
        d = abs(s0 - complex(p))
        if d == 0:
            raise DomainError("expansion point is a singularity")
        r = min(r, 0.5 * d)
    n2 = 2 * nodes
    theta = 2.0 * np.pi * np.arange(n2) / n2
    pts = s0 + r * np.exp(1j * theta)
    vals = [np.asarray(f(complex(p)), dtype=complex) for p in pts]
    vals = np.array(vals)
    phase = np.exp(-1j * order * theta)
    shape = (n2,) + (1,) * (vals.ndim - 1)
    weighted = vals * phase.reshape(shape)
    scale = math.factorial(order) / r ** order
    d_full = scale * np.mean(weighted, axis=0)
    d_half = scale * np.mean(weighted[::2], axis=0)
    mag = np.maximum(np.abs(d_full), 1.0)
    if np.any(np.abs(d_full - d_half) > tol * mag):
        raise ConvergenceError("Cauchy-circle derivative changed under node doubling")
    if np.ndim(d_full) == 0:
        return complex(d_full)
    return d_full


def hurwitz_zeta_sderiv(s, a, order: int = 1):
    """d^n/ds^n zeta(s, a); ``a`` may be an array."""
    return s_derivative(lambda t: hurwitz_zeta(t, a), s, order, singularities=(1.0,))


def stieltjes_gamma1(a):
    """Generalized Stieltjes constant gamma_1(a).

    Computed as minus the derivative at s = 1 of the entire function
    zeta(s, a) - 1/(s - 1), on a circle of radius 1/2.
    """
    a_arr = np.asarray(a, dtype=complex)
    if np.any(a_arr.real <= 0):
        raise DomainError("stieltjes_gamma1 requires Re(a) > 0")

    def g(t):
        return hurwitz_zeta(t, a_arr) - 1.0 / (t - 1.0)

    d = s_derivative(g, 1.0, 1, radius=0.5, tol=1e-10)
    out = -np.asarray(d)
    return complex(out) if out.ndim == 0 else out


def lerch_phi_sderiv(z, s=None, v=None):
    """Partial derivative of Phi(z, s, v) with respect to s."""
    if isinstance(z, LerchArgs):
        z, s, v = z.z, z.s, z.v
    z, s = complex(z), complex(s)
    radius = 0.1
    sing: tuple[complex, ...] = ()
    if abs(z) >= _SERIES_RADIUS and s.real > 0:
        # keep the circle inside Re s > 0 for the integral route
        sing = (complex(0.0, s.imag),)
    return s_derivative(lambda t: lerch_phi(z, t, v), s, 1, radius=radius,
                        singularities=sing, tol=1e-8)


__all__ = [
    "LerchArgs", "bernoulli_numbers", "bernoulli_poly", "hurwitz_zeta",
    "hurwitz_zeta_sderiv", "lerch_phi", "lerch_phi_integral", "lerch_phi_sderiv",
    "lerch_phi_series", "polylog", "s_derivative", "stieltjes_gamma1",
]
