# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops; same contracts as _pykernels."""

import numpy as np
cimport numpy as cnp
from libc.math cimport exp, fabs, fmin, pow, sqrt, hypot, log
cimport cython

cnp.import_array()

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex clog(double complex)
    double cabs(double complex)
    double creal(double complex)
    double cimag(double complex)


cdef inline void _neumaier(double *acc, double *comp, double x) noexcept nogil:
    cdef double t = acc[0] + x
    if fabs(acc[0]) >= fabs(x):
        comp[0] += (acc[0] - t) + x
    else:
        comp[0] += (x - t) + acc[0]
    acc[0] = t


def ml_series(z, logc):
    cdef double complex[::1] zv = np.ascontiguousarray(z, dtype=np.complex128)
    cdef double complex[::1] lc = np.ascontiguousarray(logc, dtype=np.complex128)
    cdef Py_ssize_t n = zv.shape[0]
    cdef Py_ssize_t nf = lc.shape[0]
    out = np.empty(n, dtype=np.complex128)
    absout = np.empty(n, dtype=np.float64)
    cdef double complex[::1] ov = out
    cdef double[::1] av = absout
    cdef Py_ssize_t i, f
    cdef double re, im, cre, cim, absum, mag, last
    cdef double complex term, logz
    with nogil:
        for i in range(n):
            re = 0.0
            im = 0.0
            cre = 0.0
            cim = 0.0
            absum = 0.0
            last = 1e308
            if zv[i] == 0:
                term = cexp(lc[0])
                ov[i] = term
                av[i] = cabs(term)
                continue
            logz = clog(zv[i])
            for f in range(nf):
                if f == 0:
                    term = cexp(lc[0])
                else:
                    term = cexp(f * logz + lc[f])
                _neumaier(&re, &cre, creal(term))
                _neumaier(&im, &cim, cimag(term))
                mag = cabs(term)
                absum += mag
                if mag <= 1e-18 * absum and mag <= last:
                    break
                last = mag
            ov[i] = (re + cre) + 1j * (im + cim)
            av[i] = absum
    return out, absout


def laplace_sum(t, rho, w):
    cdef double[::1] tv = np.ascontiguousarray(t, dtype=np.float64)
    cdef double[::1] rv = np.ascontiguousarray(rho, dtype=np.float64)
    cdef double complex[::1] wv = np.ascontiguousarray(w, dtype=np.complex128)
    cdef Py_ssize_t nt = tv.shape[0]
    cdef Py_ssize_t nr = rv.shape[0]
    out = np.empty(nt, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t j, i
    cdef double re, im, e, arg
    with nogil:
        for j in range(nt):
            re = 0.0
            im = 0.0
            for i in range(nr):
                arg = tv[j] * rv[i]
                if arg > 745.0:
                    break
                e = exp(-arg)
                re += e * creal(wv[i])
                im += e * cimag(wv[i])
            ov[j] = re + 1j * im
    return out


def lerch_series(z, s, v, double tol, Py_ssize_t maxterms):
    cdef double complex zz = z
    cdef double complex ss = s
    cdef double complex[::1] vv = np.ascontiguousarray(v, dtype=np.complex128)
    cdef Py_ssize_t nv = vv.shape[0]
    out = np.empty(nv, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, k, used = 0
    cdef double re, im, cre, cim, mag, az = cabs(zz), ratio, vn
    cdef double complex term, logz = 0
    if zz != 0:
        logz = clog(zz)
    with nogil:
        for i in range(nv):
            re = 0.0
            im = 0.0
            cre = 0.0
            cim = 0.0
            for k in range(maxterms):
                if k == 0:
                    term = cexp(-ss * clog(vv[i]))
                elif zz == 0:
                    term = 0
                else:
                    term = cexp(k * logz - ss * clog(vv[i] + k))
                _neumaier(&re, &cre, creal(term))
                _neumaier(&im, &cim, cimag(term))
                if k + 1 > used:
                    used = k + 1
                if zz == 0:
                    break
                mag = cabs(term)
                vn = cabs(vv[i] + k)
                if vn < 1e-300:
                    vn = 1e-300
                ratio = az * pow(1.0 + 1.0 / vn, -creal(ss))
                if mag <= tol * hypot(re, im) and ratio < 1.0:
                    break
            ov[i] = (re + cre) + 1j * (im + cim)
    return out, used
