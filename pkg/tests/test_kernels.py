import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mlverify import _kernels
from mlverify.complexfn import log_gamma

py = _kernels.backend_module("python")
try:
    cy = _kernels.backend_module("cython")
except ImportError:
    cy = None

needs_cython = pytest.mark.skipif(cy is None, reason="compiled extension not built")


def _logc(alpha, beta, n=200):
    f = np.arange(n)
    return -np.array([log_gamma(complex(alpha * k + beta)) for k in f])


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")
    with pytest.raises(ValueError):
        _kernels.backend_module("fortran")


def test_pure_python_switch():
    code = "from mlverify import _kernels; print(_kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         check=True, env={**os.environ, "MLV_PURE_PYTHON": "1"})
    assert out.stdout.strip() == "python"


@needs_cython
@given(st.floats(0.2, 1.8), st.floats(0.3, 2.0),
       st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False))
def test_ml_series_parity(alpha, beta, z):
    logc = _logc(alpha, beta)
    zz = np.array([z, 0.5 * z, 0j])
    a, am = py.ml_series(zz, logc)
    b, bm = cy.ml_series(zz, logc)
    assert np.allclose(a, b, rtol=1e-14, atol=1e-300)
    assert np.allclose(am, bm, rtol=1e-14)


@needs_cython
def test_laplace_sum_parity():
    rng = np.random.default_rng(3)
    t = np.sort(rng.uniform(0, 50, 700))
    rho = np.sort(rng.uniform(0, 20, 90))
    w = rng.normal(size=90) + 1j * rng.normal(size=90)
    a = py.laplace_sum(t, rho, w)
    b = cy.laplace_sum(t, rho, w)
    assert np.max(np.abs(a - b) / np.maximum(np.abs(a), 1e-300)) < 1e-13


@needs_cython
@pytest.mark.parametrize("z,s", [(0.5, 2.0), (-0.9 + 0.1j, 1.5 + 2j), (0.0, 3.0), (0.3j, -1.0)])
def test_lerch_series_parity(z, s):
    v = np.array([0.5, 1.0, 2.5 + 1j, 7.0])
    a, na = py.lerch_series(z, s, v, 1e-17, 100000)
    b, nb = cy.lerch_series(z, s, v, 1e-17, 100000)
    assert na == nb
    assert np.allclose(a, b, rtol=1e-14)


def test_lerch_series_known_value():
    # sum z^n / (n+1) = -log(1-z) / z
    vals, n = py.lerch_series(0.5, 1.0, np.array([1.0]), 1e-17, 10000)
    assert abs(vals[0] - 2 * np.log(2)) < 1e-15
    assert n < 10000


def test_ml_series_exponential():
    # alpha = beta = 1 gives exp(z)
    zz = np.array([0.3 + 0.4j, -0.9])
    s, _ = py.ml_series(zz, _logc(1.0, 1.0, 60))
    assert np.allclose(s, np.exp(zz), rtol=1e-15)
