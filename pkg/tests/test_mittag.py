import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mlverify.complexfn import gamma, rgamma
from mlverify.errors import ConvergenceError, DomainError
from mlverify.mittag import (ASYMPTOTIC_T, SWITCH_RADIUS, MLParams, mellin_ml_neg, ml,
                             ml_deriv_free_tail, ml_neg_kernel, ml_series, mittag_leffler)
from mlverify.quad import AlgebraicDecay, QuadConfig, SingularityHint, integrate_semiinf

# frozen values from long high-precision sums
ML_REF = [
    (0.7, 1.2, 2 + 1j, complex(-3.431424953308038, 13.382627847832046)),
    (1.5, 1, -30, -0.014470224834105875),
    (0.3, 1, -5, 0.13708086902027064),
    (1.2, 0.5, -3 + 0.1j, complex(-0.28446845353869926, -0.0050677298733290905)),
    (0.5, 1, -10, 0.05614099274382259),
    (0.8, 0.6 + 0.3j, -4, complex(-0.04646156387798223, 0.07647380624014254)),
    (1.8, 1, -20, 0.2018427044989826),
]


def erfc_oracle(x):
    """E_{1/2}(-x) = exp(x^2) erfc(x); a continued fraction once exp(x^2) would overflow."""
    if x < 5:
        return math.exp(x * x) * math.erfc(x)
    # exp(x^2) erfc(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    t = x
    for k in range(200, 0, -1):
        t = x + (k / 2) / t
    return 1 / (math.sqrt(math.pi) * t)


class TestEvaluation:
    def test_exponential(self):
        assert mittag_leffler(1, 1, 1) == pytest.approx(math.e, rel=1e-15)

    def test_cosine(self):
        assert abs(mittag_leffler(2, 1, -math.pi ** 2 / 4)) < 1e-15

    def test_half_at_minus_five(self):
        assert mittag_leffler(0.5, 1, -5) == pytest.approx(erfc_oracle(5), rel=1e-12)

    @pytest.mark.parametrize("alpha,beta,z,want", ML_REF)
    def test_frozen(self, alpha, beta, z, want):
        got = ml(MLParams(alpha, beta), z)
        assert abs(got - want) < 1e-12 * abs(want)

    @pytest.mark.parametrize("x", [0.1, 0.9, 1.0, 1.1, 3.0, 12.0, 40.0])
    def test_erfc_family(self, x):
        assert mittag_leffler(0.5, 1, -x) == pytest.approx(erfc_oracle(x), rel=1e-12)

    def test_array_and_scalar(self):
        z = np.array([[-0.5, -2.0], [0.5 + 1j, -60.0]])
        out = ml(MLParams(0.6, 1.0), z)
        assert out.shape == (2, 2)
        assert out[1, 1] == pytest.approx(ml(MLParams(0.6, 1.0), -60.0), rel=1e-15)

    def test_params_validation(self):
        with pytest.raises(DomainError):
            MLParams(-0.5)
        with pytest.raises(DomainError):
            MLParams(0.5 + 1j)

    def test_at_zero(self):
        for b in (0.25, 0.5, 1.3, 2.0):
            assert ml(MLParams(b, 1.0), 0) == pytest.approx(1, rel=1e-15)


class TestRoutes:
    @pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8, 0.95])
    @pytest.mark.parametrize("scale", [0.9, 1.0, 1.1])
    def test_series_kernel_handoff(self, alpha, scale):
        u = SWITCH_RADIUS * scale
        p = MLParams(alpha, 1.0)
        a = complex(ml_series(p, -u)[0])
        b = complex(ml_neg_kernel(p, u)[0])
        assert abs(a - b) < 1e-8 * abs(a)

    @pytest.mark.parametrize("alpha,beta", [(0.4, 1.0), (0.7, 1.3), (1.5, 1.0), (1.2, 0.6)])
    def test_kernel_asymptotic_handoff(self, alpha, beta):
        p = MLParams(alpha, beta)
        for t in (0.98 * ASYMPTOTIC_T, 1.02 * ASYMPTOTIC_T):
            u = t ** alpha
            a = ml(p, -u)
            b = complex(ml_neg_kernel(p, u)[0])
            assert abs(a - b) < 1e-10 * max(abs(b), 1e-3)

    def test_kernel_domain(self):
        with pytest.raises(DomainError):
            ml_neg_kernel(MLParams(1.0), 2.0)
        with pytest.raises(DomainError):
            ml_neg_kernel(MLParams(0.5), -1.0)

    @pytest.mark.parametrize("alpha", [0.2, 0.5, 0.75, 1.0])
    def test_completely_monotone_surrogate(self, alpha):
        # e^{-u} underflows past u ~ 745, so the exponential case stops at 700
        u = np.logspace(-3, 3 if alpha < 1 else math.log10(700), 241)
        vals = np.real(ml(MLParams(alpha, 1.0), -u))
        assert np.all(vals > 0)
        assert np.all(np.diff(vals) < 0)


class TestTail:
    def test_half_at_hundred(self):
        val, bound = ml_deriv_free_tail(MLParams(0.5), 100.0)
        lead = 1 / (100 * math.sqrt(math.pi))
        assert abs(val - lead) < 1e-4 * lead
        assert val == pytest.approx(erfc_oracle(100), rel=1e-12)
        assert bound < 1e-12 * val

    def test_exponential_is_exact(self):
        assert ml_deriv_free_tail(MLParams(1.0), 3.0) == (math.exp(-3.0), 0.0)

    def test_quarter_positive_decreasing(self):
        v1, _ = ml_deriv_free_tail(MLParams(0.25), 1e3)
        v2, _ = ml_deriv_free_tail(MLParams(0.25), 2e3)
        assert 0 < v2 < v1

    def test_small_u_refused(self):
        with pytest.raises(ConvergenceError):
            ml_deriv_free_tail(MLParams(0.9), 2.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            ml_deriv_free_tail(MLParams(1.5), 10.0)


class TestMellin:
    def test_exponential_case(self):
        assert mellin_ml_neg(0.5, 1.0) == pytest.approx(math.sqrt(math.pi), rel=1e-14)

    def test_half_half(self):
        want = math.pi / math.gamma(0.75)
        assert mellin_ml_neg(0.5, 0.5) == pytest.approx(want, rel=1e-14)

    @pytest.mark.parametrize("s", [0.3, 0.5, 0.7])
    @pytest.mark.parametrize("b", [0.25, 0.5, 0.75])
    def test_quadrature_grid(self, s, b):
        p = MLParams(b, 1.0)
        hint = SingularityHint(s - 1, AlgebraicDecay(s - 2))
        q = integrate_semiinf(lambda u: u ** (s - 1) * ml(p, -u), 0.0, hint,
                              QuadConfig(rel_tol=1e-10))
        assert abs(q.value / mellin_ml_neg(s, b) - 1) < 1e-6

    def test_strip(self):
        with pytest.raises(DomainError):
            mellin_ml_neg(1.2, 0.5)


@given(st.floats(0.2, 1.9), st.floats(0.3, 3), st.floats(-1, 1),
       st.floats(0, 5), st.floats(-math.pi, math.pi))
def test_beta_recurrence(alpha, br, bi, r, phi):
    beta = complex(br, bi)
    z = r * complex(math.cos(phi), math.sin(phi))
    lhs = ml(MLParams(alpha, beta), z)
    rhs = z * ml(MLParams(alpha, alpha + beta), z) + complex(rgamma(beta))
    assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(lhs))


@given(st.floats(0.1, 30))
def test_two_one_is_cosine(x):
    assert abs(ml(MLParams(2.0, 1.0), -x) - math.cos(math.sqrt(x))) < 1e-13


def test_gamma_normalisation():
    # E_{a,b}(0) = 1/Gamma(b)
    for b in (0.5, 1.5, 2.5 + 1j):
        assert ml(MLParams(0.7, b), 0) == pytest.approx(1 / gamma(b), rel=1e-14)
