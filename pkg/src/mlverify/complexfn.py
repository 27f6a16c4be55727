"""Complex elementary and classical special functions on principal branches.

Every function accepts a scalar or an array.  Scalars come back as Python
``complex``; arrays come back as ``complex128`` arrays of the broadcast shape.
All logarithms and powers use the principal branch, Arg in (-pi, pi].
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (BranchCutWarning, ConvergenceError, DomainError, PoleError,
                     RegionError, SingularityError)

EULER_GAMMA = 0.57721566490153286061

_LANCZOS_G = 7.0
_LANCZOS = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_SQRT_2PI = math.sqrt(2.0 * math.pi)

# B_{2k} for k = 1..10
_BERNOULLI_EVEN = np.array([
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
    7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330,
])


def _prep(*args):
    arrs = [np.asarray(a, dtype=complex) for a in args]
    scalar = all(a.ndim == 0 for a in arrs)
    arrs = np.broadcast_arrays(*arrs)
    return [np.array(a, dtype=complex, ndmin=1) for a in arrs], scalar


def _out(x: np.ndarray, scalar: bool):
    if scalar:
        return complex(x.reshape(-1)[0])
    return x


def _nonpositive_int_mask(z: np.ndarray) -> np.ndarray:
    return (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))


def _sinpi_real(x: np.ndarray) -> np.ndarray:
    # reduce to [-1, 1], then fold onto [-1/2, 1/2]; exact zeros at integers
    r = x - 2.0 * np.round(x / 2.0)
    r = np.where(r > 0.5, 1.0 - r, np.where(r < -0.5, -1.0 - r, r))
    return np.sin(np.pi * r)


def sinpi(z):
    """sin(pi z) with the real part reduced exactly modulo 2."""
    z = np.asarray(z, dtype=complex)
    x, y = z.real, np.pi * z.imag
    return _sinpi_real(x) * np.cosh(y) + 1j * _sinpi_real(x + 0.5) * np.sinh(y)


def cospi(z):
    z = np.asarray(z, dtype=complex)
    x, y = z.real, np.pi * z.imag
    return _sinpi_real(x + 0.5) * np.cosh(y) - 1j * _sinpi_real(x) * np.sinh(y)


@dataclass(frozen=True)
class BranchLog:
    """Principal logarithm together with its argument."""

    value: complex
    arg: float


def principal_log(z: complex) -> BranchLog:
    z = complex(z)
    if z == 0:
        raise SingularityError("logarithm of zero")
    v = complex(np.log(z))
    return BranchLog(v, v.imag)


def complex_pow(z, k):
    """Principal power exp(k Log z).

    A zero base gives zero when Re k > 0 and raises ``SingularityError``
    otherwise.
    """
    (z, k), scalar = _prep(z, k)
    out = np.zeros(z.shape, dtype=complex)
    zero = z == 0
    if np.any(zero & (k.real <= 0)):
        raise SingularityError("zero base with Re(k) <= 0")
    nz = ~zero
    with np.errstate(over="ignore", invalid="ignore"):
        out[nz] = np.exp(k[nz] * np.log(z[nz]))
    return _out(out, scalar)


def _lanczos(z: np.ndarray) -> np.ndarray:
    x = z - 1.0
    acc = np.full(x.shape, _LANCZOS[0], dtype=complex)
    for i in range(1, len(_LANCZOS)):
        acc = acc + _LANCZOS[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    with np.errstate(over="ignore", invalid="ignore"):
        return _SQRT_2PI * np.exp((x + 0.5) * np.log(t) - t) * acc


def gamma(z):
    """Gamma function.

    Parameters
    ----------
    z : complex or array_like
        Argument, not a nonpositive integer.

    Returns
    -------
    complex or ndarray
        Gamma(z), from a Lanczos approximation on Re z >= 1/2 and the
        reflection formula elsewhere.

    Raises
    ------
    PoleError
        If any argument is a nonpositive integer.
    """
    (z,), scalar = _prep(z)
    poles = _nonpositive_int_mask(z)
    if np.any(poles):
        n = int(z[poles][0].real)
        raise PoleError(f"gamma has a pole at {n}", n)
    out = np.empty_like(z)
    left = z.real < 0.5
    out[~left] = _lanczos(z[~left])
    if np.any(left):
        zl = z[left]
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            out[left] = np.pi / (sinpi(zl) * _lanczos(1.0 - zl))
    return _out(out, scalar)


def _stirling(z: np.ndarray) -> np.ndarray:
    zinv = 1.0 / z
    z2 = zinv * zinv
    corr = np.zeros_like(z)
    p = zinv.copy()
    for k in range(1, 9):
        b = _BERNOULLI_EVEN[k - 1]
        corr = corr + b / (2 * k * (2 * k - 1)) * p
        p = p * z2
    return (z - 0.5) * np.log(z) - z + _HALF_LOG_2PI + corr


def _loggamma_right(z: np.ndarray) -> np.ndarray:
    # analytic log-gamma for Re z > 0: shift up until |z| >= 15
    shift = np.zeros(z.shape, dtype=complex)
    w = z.copy()
    for _ in range(16):
        small = np.abs(w) < 15.0
        if not np.any(small):
            break
        shift[small] += np.log(w[small])
        w[small] += 1.0
    return _stirling(w) - shift


def log_gamma(z):
    """Log-gamma on the right half-plane.

    This is the analytic continuation of ``ln Gamma`` from the positive
    axis. It agrees with the principal ``log(gamma(z))`` up to a multiple
    of 2*pi*i.
    """
    (z,), scalar = _prep(z)
    if np.any(z.real <= 0):
        raise DomainError("log_gamma requires Re(z) > 0")
    return _out(_loggamma_right(z), scalar)


def rgamma(z):
    """Reciprocal gamma 1/Gamma(z); entire, zero at the nonpositive integers."""
    (z,), scalar = _prep(z)
    out = np.zeros_like(z)
    poles = _nonpositive_int_mask(z)
    right = (z.real >= 0.5) & ~poles
    left = (z.real < 0.5) & ~poles
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        if np.any(right):
            zr = z[right]
            big = np.abs(zr) > 150.0
            vals = np.empty_like(zr)
            vals[~big] = 1.0 / _lanczos(zr[~big])
            vals[big] = np.exp(-_loggamma_right(zr[big]))
            out[right] = vals
        if np.any(left):
            zl = z[left]
            w = 1.0 - zl
            big = np.abs(w) > 150.0
            g = np.empty_like(w)
            g[~big] = _lanczos(w[~big])
            g[big] = np.exp(_loggamma_right(w[big]))
            out[left] = g * sinpi(zl) / np.pi
    return _out(out, scalar)


def digamma(z):
    """Digamma psi(z) via reflection, upward recurrence and Stirling's series."""
    (z,), scalar = _prep(z)
    poles = _nonpositive_int_mask(z)
    if np.any(poles):
        n = int(z[poles][0].real)
        raise PoleError(f"digamma has a pole at {n}", n)
    out = np.zeros_like(z)
    left = z.real < 0.5
    w = np.where(left, 1.0 - z, z)
    acc = np.zeros_like(z)
    for _ in range(64):
        small = np.abs(w) < 12.0
        if not np.any(small):
            break
        acc[small] -= 1.0 / w[small]
        w[small] += 1.0
    winv = 1.0 / w
    w2 = winv * winv
    series = np.zeros_like(w)
    p = w2.copy()
    for k in range(1, 10):
        series = series + _BERNOULLI_EVEN[k - 1] / (2 * k) * p
        p = p * w2
    psi = np.log(w) - 0.5 * winv - series + acc
    if np.any(left):
        zl = z[left]
        psi[left] = psi[left] - np.pi * cospi(zl) / sinpi(zl)
    out[:] = psi
    return _out(out, scalar)


def binom(lam, h):
    """Generalized binomial coefficient lam(lam-1)...(lam-h+1)/h!.

    ``h`` is a nonnegative integer or an array of them.
    """
    lam = complex(lam)
    harr = np.asarray(h)
    if np.any(harr < 0) or np.any(harr != np.round(harr)):
        raise DomainError("binom needs a nonnegative integer h")
    hmax = int(np.max(harr)) if harr.size else 0
    k = np.arange(hmax, dtype=float)
    ratios = (lam - k) / (k + 1.0)
    table = np.concatenate(([1.0 + 0j], np.cumprod(ratios)))
    res = table[harr.astype(int)]
    if harr.ndim == 0:
        return complex(res)
    return res


# ---------------------------------------------------------------------------
# incomplete gamma

def _lower_series(s: complex, z: complex) -> complex:
    # gamma(s, z) = z^s e^{-z} sum z^n / (s (s+1) ... (s+n))
    term = 1.0 / s
    total = term
    n = 0
    limit = 100000
    while True:
        n += 1
        term *= z / (s + n)
        total += term
        if abs(term) < 1e-17 * abs(total) and n > abs(z):
            break
        if n > limit:
            raise ConvergenceError("incomplete gamma series did not converge")
    return total * np.exp(s * np.log(z) - z)


def _e1_series(z: complex) -> complex:
    total = 0.0 + 0j
    term = 1.0 + 0j
    k = 0
    while True:
        k += 1
        term *= -z / k
        add = term / k
        total += add
        if abs(add) < 1e-17 * max(abs(total), 1e-300) and k > abs(z):
            break
        if k > 100000:
            raise ConvergenceError("E1 series did not converge")
    return -EULER_GAMMA - np.log(z) - total


def _upper_cf(s: complex, z: complex, maxiter: int = 20000) -> complex | None:
    # modified Lentz on the Legendre continued fraction
    tiny = 1e-300
    b = z + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / b if b != 0 else 1.0 / tiny
    h = d
    for i in range(1, maxiter):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if d == 0:
            d = tiny
        c = b + an / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return complex(np.exp(s * np.log(z) - z) * h)
    return None


def _uig_scalar(s: complex, z: complex) -> complex:
    if z == 0:
        if s.real > 0:
            return gamma(s)
        raise PoleError("Gamma(s, 0) diverges for Re(s) <= 0", 0)
    is_int = s.imag == 0 and s.real == round(s.real)
    if is_int and 1 <= s.real <= 60:
        n = int(s.real)
        term = 1.0 + 0j
        acc = 1.0 + 0j
        for k in range(1, n):
            term *= z / k
            acc += term
        return complex(math.factorial(n - 1) * np.exp(-z) * acc)
    if z.imag == 0 and z.real < 0 and not is_int:
        warnings.warn("incomplete gamma evaluated on the negative real axis; "
                      "principal (upper-side) value returned", BranchCutWarning,
                      stacklevel=3)
    if abs(z) >= abs(s) + 1.0:
        v = _upper_cf(s, z)
        if v is not None:
            return v
    if is_int and s.real <= 0:
        n = int(-s.real)
        e1 = _e1_series(z)
        acc = 0j
        fact = 1.0
        for k in range(n):
            if k > 0:
                fact *= k
            acc += (-1) ** k * fact / z ** (k + 1)
        return complex((-1) ** n / math.factorial(n) * (e1 - np.exp(-z) * acc))
    return complex(gamma(s) - _lower_series(s, z))


def upper_incomplete_gamma(s, z):
    """Upper incomplete gamma Gamma(s, z) on the principal branch.

    Integer ``s >= 1`` uses the finite closed form.  Other orders use the
    power series for |z| < |s| + 1 and the Legendre continued fraction
    otherwise.  Nonpositive integer orders go through E1.
    """
    (s, z), scalar = _prep(s, z)
    out = np.empty_like(z)
    sint = (s.imag == 0) & (s.real == np.round(s.real)) & (s.real >= 1) & (s.real <= 60)
    if np.all(sint) and np.all(s == s.flat[0]):
        n = int(s.flat[0].real)
        term = np.ones_like(z)
        acc = np.ones_like(z)
        for k in range(1, n):
            term = term * z / k
            acc = acc + term
        out = math.factorial(n - 1) * np.exp(-z) * acc
        return _out(out, scalar)
    for idx in np.ndindex(z.shape):
        out[idx] = _uig_scalar(complex(s[idx]), complex(z[idx]))
    return _out(out, scalar)


def lower_incomplete_gamma(s, z):
    (s, z), scalar = _prep(s, z)
    out = np.empty_like(z)
    for idx in np.ndindex(z.shape):
        si, zi = complex(s[idx]), complex(z[idx])
        if zi == 0:
            out[idx] = 0.0
        else:
            out[idx] = _lower_series(si, zi)
    return _out(out, scalar)


# ---------------------------------------------------------------------------
# Gauss hypergeometric

def _gauss_series(a: complex, b: complex, c: complex, z: complex) -> complex:
    total = 1.0 + 0j
    term = 1.0 + 0j
    for n in range(100000):
        num = (a + n) * (b + n)
        if num == 0:
            return total
        term *= num / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) <= 1e-15 * abs(total) and abs(z) * abs((a + n + 1) * (b + n + 1)
                                                             / ((c + n + 1) * (n + 2))) < 1:
            return total
    raise ConvergenceError("2F1 series exceeded 1e5 terms")


def hyp2f1(a, b, c, z):
    """Gauss hypergeometric function by direct series or the Pfaff transform."""
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if c.imag == 0 and c.real <= 0 and c.real == round(c.real):
        raise PoleError("2F1 undefined for nonpositive integer c", int(c.real))
    if z == 0:
        return 1.0 + 0j
    zp = z / (z - 1.0) if z != 1 else None
    direct_ok = abs(z) < 1
    pfaff_ok = zp is not None and abs(zp) < 1
    if direct_ok and (not pfaff_ok or abs(z) <= abs(zp)):
        return _gauss_series(a, b, c, z)
    if pfaff_ok:
        return complex((1.0 - z) ** (-a) * _gauss_series(a, c - b, c, zp))
    raise RegionError("2F1 argument outside |z|<1 and |z/(z-1)|<1")
