import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from mlverify.complexfn import (EULER_GAMMA, binom, complex_pow, cospi, digamma, gamma,
                                hyp2f1, log_gamma, lower_incomplete_gamma, principal_log,
                                rgamma, sinpi, upper_incomplete_gamma)
from mlverify.errors import BranchCutWarning, DomainError, PoleError, SingularityError

# frozen high-precision reference values
GAMMA_REF = {
    3.7: 4.170651783796604,
    -2.5: -0.9453087204829419,
    0.3 + 2j: complex(0.057465337569588035, -0.07498491258264614),
}
LOGGAMMA_REF = {
    10 + 20j: complex(-1.702980443956511, 52.660660425584716),
}
DIGAMMA_REF = {
    0.25: -4.2274535333762655,
    -1.5 + 0.5j: complex(0.7318926373545227, 2.6406595199775147),
}
UIG_REF = [
    (0.5, 2, 0.08064711796031769),
    (2.5, 1 + 1j, complex(1.2036740861472455, -0.44737947558537494)),
    (0, 0.5, 0.5597735947761608),
    (-1, 1 + 0.5j, complex(0.047180195412979, -0.11932403261221174)),
    (3, 2 + 1j, complex(1.3413819747687452, -0.586194632990955)),
    (0.3 + 0.2j, 5 - 2j, complex(-0.0017111954333079396, 0.0010367207620839872)),
]
HYP_REF = [
    ((0.5, 1, 1.5, 0.25), 1.0986122886681098),
    ((0.3, 0.7, 1.9, -3 + 1j), complex(0.8223460240147211, 0.03345002257345821)),
    ((1, 2, 3.5, 0.9j), complex(0.7837484927723961, 0.3774551503607932)),
]


def rel(a, b):
    return abs(a - b) / abs(b)


def weierstrass_gamma(z, n=1_000_000):
    """1/Gamma(z) = z e^{gamma z} prod (1 + z/k) e^{-z/k}, with a tail correction."""
    k = np.arange(1, n + 1, dtype=float)
    s = np.sum(np.log1p(z / k) - z / k)
    # sum over k > n of log(1+z/k) - z/k ~ -z^2/(2n) + z^3/(6 n^2)
    s += -z * z / (2 * n) + z ** 3 / (6 * n * n)
    return 1.0 / (z * np.exp(EULER_GAMMA * z + s))


def digamma_asymptotic(x, shift=60):
    """Upward shift then the Stirling series; independent of the library."""
    acc = 0.0
    for k in range(shift):
        acc -= 1.0 / (x + k)
    w = x + shift
    b2k = [1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6]
    tail = math.log(w) - 1 / (2 * w)
    for j, b in enumerate(b2k, 1):
        tail -= b / (2 * j * w ** (2 * j))
    return acc + tail


def e1_continued_fraction(z, depth=3000):
    """E1(z) = e^{-z} / (z + 1/(1 + 1/(z + 2/(1 + 2/(z + ...)))))."""
    t = z
    for k in range(depth, 0, -1):
        t = 1 + k / t
        t = z + k / t
    return cmath.exp(-z) / t


class TestGamma:
    def test_small_values(self):
        assert gamma(1) == pytest.approx(1, rel=1e-15)
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)

    @pytest.mark.parametrize("z", list(GAMMA_REF))
    def test_frozen(self, z):
        assert rel(gamma(z), GAMMA_REF[z]) < 1e-13

    def test_product_oracle(self):
        z = 0.3 + 0.4j
        assert rel(gamma(z), weierstrass_gamma(z)) < 1e-11

    def test_poles(self):
        with pytest.raises(PoleError):
            gamma(-3)
        assert rgamma(-3) == 0

    def test_vectorized(self):
        z = np.array([0.5, 1.5, 2.5])
        np.testing.assert_allclose(gamma(z).real, [math.gamma(x) for x in z], rtol=1e-14)


class TestLogGamma:
    def test_small_values(self):
        assert abs(log_gamma(1)) < 1e-15
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)

    @pytest.mark.parametrize("z", list(LOGGAMMA_REF))
    def test_frozen(self, z):
        assert abs(log_gamma(z) - LOGGAMMA_REF[z]) < 1e-12 * abs(LOGGAMMA_REF[z])

    def test_left_half_plane_rejected(self):
        with pytest.raises(DomainError):
            log_gamma(-2.5 + 0.1j)

    def test_continuous_along_ray(self):
        # log Gamma(z) = integral of digamma along the segment from 1 to z
        z = 2 + 3j
        t = np.linspace(0, 1, 2001)
        path = 1 + t * (z - 1)
        vals = digamma(path) * (z - 1)
        w = np.ones_like(t)
        w[1:-1:2], w[2:-1:2] = 4, 2
        integral = np.sum(w * vals) * (t[1] - t[0]) / 3
        assert abs(log_gamma(z) - integral) < 1e-10
        assert abs(cmath.exp(log_gamma(z)) - gamma(z)) < 1e-13 * abs(gamma(z))


class TestDigamma:
    def test_classical(self):
        assert digamma(1) == pytest.approx(-EULER_GAMMA, rel=1e-14)
        assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2 * math.log(2), rel=1e-14)

    @pytest.mark.parametrize("z", list(DIGAMMA_REF))
    def test_frozen(self, z):
        assert rel(digamma(z), DIGAMMA_REF[z]) < 1e-13

    def test_eighths_difference(self):
        want = digamma_asymptotic(3 / 8) - digamma_asymptotic(7 / 8)
        got = digamma(3 / 8) - digamma(7 / 8)
        assert abs(got - want) < 1e-13 * abs(want)

    def test_pole(self):
        with pytest.raises(PoleError):
            digamma(0)


class TestIncompleteGamma:
    def test_exponential(self):
        for x in (0.1, 1.0, 7.5):
            assert upper_incomplete_gamma(1, x) == pytest.approx(math.exp(-x), rel=1e-14)

    def test_at_zero(self):
        assert upper_incomplete_gamma(2, 0) == pytest.approx(1, rel=1e-14)

    def test_e1_continued_fraction(self):
        assert rel(upper_incomplete_gamma(0, 1), e1_continued_fraction(1.0)) < 1e-13

    @pytest.mark.parametrize("s,z,want", UIG_REF)
    def test_frozen(self, s, z, want):
        assert rel(upper_incomplete_gamma(s, z), want) < 1e-11

    def test_lower_plus_upper(self):
        s, z = 1.7 + 0.3j, 2.2 - 0.4j
        total = lower_incomplete_gamma(s, z) + upper_incomplete_gamma(s, z)
        assert rel(total, gamma(s)) < 1e-12

    def test_zero_argument_nonpositive_order(self):
        with pytest.raises(DomainError):
            upper_incomplete_gamma(-0.5, 0)

    def test_branch_cut_warns(self):
        with pytest.warns(BranchCutWarning):
            upper_incomplete_gamma(0.5, -2.0)

    @given(st.floats(0.2, 4), st.floats(0.3, 6), st.floats(-2, 2))
    def test_z_derivative(self, s, x, y):
        z = complex(x, y)
        h = 1e-5
        fd = (upper_incomplete_gamma(s, z + h) - upper_incomplete_gamma(s, z - h)) / (2 * h)
        want = -cmath.exp((s - 1) * cmath.log(z) - z)
        assert abs(fd - want) < 1e-6 * max(1.0, abs(want))


class TestBinomAndPowers:
    def test_binom_examples(self):
        assert binom(0.7 + 2j, 0) == 1
        for h in range(6):
            assert binom(-1, h) == pytest.approx((-1) ** h, abs=1e-15)
        assert binom(-0.5, 2) == pytest.approx(3 / 8, rel=1e-15)

    @given(st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False),
           st.integers(0, 40))
    def test_binom_step(self, lam, h):
        lhs = binom(lam, h + 1) * (h + 1)
        rhs = binom(lam, h) * (lam - h)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))

    def test_binom_rejects_negative(self):
        with pytest.raises(DomainError):
            binom(1.5, -1)

    def test_principal_powers(self):
        assert complex_pow(-1, 2) == pytest.approx(1, abs=1e-15)
        assert complex_pow(1j, 1j) == pytest.approx(math.exp(-math.pi / 2), rel=1e-15)
        u = 2.5
        assert complex_pow(-u, 0.5) == pytest.approx(1j * math.sqrt(u), rel=1e-15)
        assert complex_pow(0, 0.5) == 0
        with pytest.raises(SingularityError):
            complex_pow(0, -1)

    def test_principal_log(self):
        b = principal_log(-1)
        assert b.arg == pytest.approx(math.pi)
        with pytest.raises(SingularityError):
            principal_log(0)

    def test_sinpi_cospi_exact_at_integers(self):
        assert sinpi(3.0) == 0
        assert cospi(0.5) == 0


class TestHyp2f1:
    def test_origin(self):
        assert hyp2f1(0.3, 1.2, 2.5, 0) == 1

    def test_terminating(self):
        b, c, z = 0.7 + 0.1j, 1.9, 0.4 - 0.3j
        assert hyp2f1(-1, b, c, z) == pytest.approx(1 - b * z / c, rel=1e-14)

    def test_log_oracle(self):
        assert hyp2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), rel=1e-14)

    @pytest.mark.parametrize("args,want", HYP_REF)
    def test_frozen(self, args, want):
        assert rel(hyp2f1(*args), want) < 1e-12

    def test_pole_in_c(self):
        with pytest.raises(PoleError):
            hyp2f1(1, 1, -2, 0.5)


def _off_poles(z, gap=0.05):
    return not (z.real <= 0.5 and abs(z.imag) < gap and abs(z.real - round(z.real)) < gap)


@given(st.floats(-8, 8), st.floats(-8, 8))
def test_gamma_reflection(x, y):
    z = complex(x, y)
    assume(_off_poles(z) and _off_poles(1 - z))
    val = gamma(z) * gamma(1 - z) * sinpi(z) / math.pi
    assert abs(val - 1) < 1e-10


@given(st.floats(-8, 8), st.floats(-8, 8))
def test_gamma_digamma_recurrence(x, y):
    z = complex(x, y)
    assume(_off_poles(z) and _off_poles(z + 1) and abs(z) > 0.05)
    assert rel(gamma(z + 1), z * gamma(z)) < 1e-11
    want = digamma(z) + 1 / z
    assert abs(digamma(z + 1) - want) < 1e-11 * max(1.0, abs(want))
