"""Numpy implementations of the hot loops (fallback backend)."""

from __future__ import annotations

import numpy as np


def _two_sum(acc, comp, x):
    # Neumaier compensated step, applied component-wise
    t = acc + x
    big = np.abs(acc) >= np.abs(x)
    comp = comp + np.where(big, (acc - t) + x, (x - t) + acc)
    return t, comp


def ml_series(z, logc):
    """Compensated sum of exp(f Log z + logc[f]) over f for each z.

    Returns ``(sums, abs_sums)``; ``abs_sums`` is the sum of term moduli,
    used by the caller as a cancellation indicator.
    """
    z = np.ascontiguousarray(z, dtype=np.complex128)
    logc = np.ascontiguousarray(logc, dtype=np.complex128)
    n = z.shape[0]
    re = np.zeros(n)
    im = np.zeros(n)
    cre = np.zeros(n)
    cim = np.zeros(n)
    absum = np.zeros(n)
    zero = z == 0
    logz = np.log(np.where(zero, 1.0, z))
    last = np.full(n, np.inf)
    active = np.ones(n, dtype=bool)
    for f in range(logc.shape[0]):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        if f == 0:
            term = np.full(idx.size, np.exp(logc[0]))
        else:
            term = np.exp(f * logz[idx] + logc[f])
            term[zero[idx]] = 0.0
        re[idx], cre[idx] = _two_sum(re[idx], cre[idx], term.real)
        im[idx], cim[idx] = _two_sum(im[idx], cim[idx], term.imag)
        mag = np.abs(term)
        absum[idx] += mag
        done = (mag <= 1e-18 * absum[idx]) & (mag <= last[idx])
        last[idx] = mag
        active[idx[done]] = False
    return (re + cre) + 1j * (im + cim), absum


def laplace_sum(t, rho, w):
    """S_j = sum_i w_i exp(-t_j rho_i) for ascending ``rho``."""
    t = np.ascontiguousarray(t, dtype=np.float64)
    rho = np.ascontiguousarray(rho, dtype=np.float64)
    w = np.ascontiguousarray(w, dtype=np.complex128)
    out = np.empty(t.shape[0], dtype=np.complex128)
    chunk = 256
    for start in range(0, t.shape[0], chunk):
        tt = t[start:start + chunk]
        arg = np.minimum(np.outer(tt, rho), 745.0)
        e = np.exp(-arg)
        out[start:start + chunk] = e @ w
    return out


def lerch_series(z, s, v, tol, maxterms):
    """Direct Lerch series sum_n z^n (v+n)^(-s) for a vector of ``v``.

    Returns ``(values, nterms)``, where ``nterms`` is the largest term
    count used.  ``nterms == maxterms`` signals non-convergence.
    """
    z = complex(z)
    s = complex(s)
    v = np.ascontiguousarray(v, dtype=np.complex128)
    n_v = v.shape[0]
    re = np.zeros(n_v)
    im = np.zeros(n_v)
    cre = np.zeros(n_v)
    cim = np.zeros(n_v)
    active = np.ones(n_v, dtype=bool)
    logz = np.log(z) if z != 0 else 0.0
    az = abs(z)
    used = 0
    for n in range(maxterms):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        used = n + 1
        if n == 0:
            term = np.exp(-s * np.log(v[idx]))
        elif z == 0:
            term = np.zeros(idx.size, dtype=complex)
        else:
            term = np.exp(n * logz - s * np.log(v[idx] + n))
        re[idx], cre[idx] = _two_sum(re[idx], cre[idx], term.real)
        im[idx], cim[idx] = _two_sum(im[idx], cim[idx], term.imag)
        mag = np.abs(term)
        tot = np.hypot(re[idx], im[idx])
        vn = np.abs(v[idx] + n)
        ratio = az * (1.0 + 1.0 / np.maximum(vn, 1e-300)) ** (-s.real)
        done = (mag <= tol * tot) & (ratio < 1.0)
        if z == 0:
            done[:] = True
        active[idx[done]] = False
    return (re + cre) + 1j * (im + cim), used
