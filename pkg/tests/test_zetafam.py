import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mlverify.complexfn import EULER_GAMMA, digamma
from mlverify.errors import DomainError, RegionError
from mlverify.zetafam import (LerchArgs, bernoulli_numbers, bernoulli_poly, hurwitz_zeta,
                              hurwitz_zeta_sderiv, lerch_phi, lerch_phi_integral,
                              lerch_phi_sderiv, lerch_phi_series, polylog, s_derivative,
                              stieltjes_gamma1)

ZETA_REF = [
    (3, 0.5 + 0.5j, complex(-1.755905360082049, -2.258385053966532)),
    (-1.5, 2, -1.025485201889833),
    (0.5, 0.3, 0.011152780309969856),
    (2 + 3j, 1.5, complex(-0.007193895298370438, -0.37031881787858917)),
]
LERCH_REF = [
    (0.5, 2, 0.7, 2.261609154464878),
    (-0.99, 1.5, 1 + 1j, complex(0.09184580272068515, -0.41389735720498055)),
    (cmath.exp(2j), 0.5, 0.5, complex(0.9894028851505314, 0.3436267474371473)),
    (1j, -3, 0.5, complex(0.6875, -0.6875)),
]
ZETA_DERIV_REF = [
    (0.5, 1, -3.0563376308624983),
    (0.3 + 0.2j, 1, complex(-2.7125116113662506, -1.453263427103964)),
    (0.5, 2, -15.313547331783722),
]
STIELTJES_REF = {0.25: -5.5180763501994035, 1: -0.07281584548367673}


def rel(a, b):
    return abs(a - b) / abs(b)


def stieltjes_direct(n=10_000):
    """gamma_1 = lim sum_{k<=n} ln k / k - (ln n)^2 / 2, with Euler-Maclaurin tail."""
    k = np.arange(1, n + 1, dtype=float)
    ln = math.log(n)
    val = float(np.sum(np.log(k) / k)) - ln * ln / 2 - ln / (2 * n)
    # f^(m)(x) = (-1)^m m! (ln x - H_m) / x^(m+1) for f(x) = ln x / x
    for j, b in ((1, 1 / 6), (2, -1 / 30), (3, 1 / 42)):
        m = 2 * j - 1
        h = sum(1 / i for i in range(1, m + 1))
        deriv = -math.factorial(m) * (ln - h) / n ** (m + 1)
        val -= b / math.factorial(2 * j) * deriv
    return val


def richardson_derivative(f, s, h=0.02):
    """Central differences at h, h/2, h/4 combined to sixth order."""
    d = [(f(s + t) - f(s - t)) / (2 * t) for t in (h, h / 2, h / 4)]
    d1 = [(4 * d[i + 1] - d[i]) / 3 for i in range(2)]
    return (16 * d1[1] - d1[0]) / 15


class TestLerch:
    def test_zero_argument(self):
        assert lerch_phi(0, 2.5, 1.5 + 0.5j) == pytest.approx((1.5 + 0.5j) ** -2.5, rel=1e-15)

    def test_polylog_identification(self):
        z, s = 0.4 - 0.3j, 2.5
        assert lerch_phi(z, s, 1) == pytest.approx(polylog(s, z) / z, rel=1e-14)

    def test_log_oracle(self):
        assert lerch_phi(0.5, 1, 1) == pytest.approx(2 * math.log(2), rel=1e-14)

    @pytest.mark.parametrize("z,s,v,want", LERCH_REF)
    def test_frozen(self, z, s, v, want):
        assert rel(lerch_phi(z, s, v), want) < 1e-10

    def test_args_record(self):
        a = LerchArgs(0.5, 2, 0.7)
        assert a.region() == "series"
        assert LerchArgs(cmath.exp(1j), 2, 0.7).region() == "integral"
        assert lerch_phi(a) == lerch_phi(0.5, 2, 0.7)

    def test_vector_v(self):
        v = np.array([0.5, 1.0, 2.5])
        got = lerch_phi(0.3, 2, v)
        assert got.shape == (3,)
        assert got[1] == pytest.approx(lerch_phi(0.3, 2, 1.0), rel=1e-15)

    def test_outside_unit_disc(self):
        with pytest.raises(DomainError):
            lerch_phi(1.5, 2, 1)


class TestHurwitz:
    def test_basel(self):
        assert hurwitz_zeta(2, 1) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)

    def test_order_zero(self):
        for a in (0.3, 1.7, 0.5 + 2j):
            assert hurwitz_zeta(0, a) == pytest.approx(0.5 - a, rel=1e-14)

    def test_eighths_difference(self):
        # zeta(-1, a) = -B_2(a) / 2 with B_2(a) = a^2 - a + 1/6
        def b2(a):
            return a * a - a + 1 / 6
        want = -b2(3 / 8) / 2 + b2(7 / 8) / 2
        got = hurwitz_zeta(-1, 3 / 8) - hurwitz_zeta(-1, 7 / 8)
        assert abs(got - want) < 1e-14

    @pytest.mark.parametrize("s,a,want", ZETA_REF)
    def test_frozen(self, s, a, want):
        assert rel(hurwitz_zeta(s, a), want) < 1e-12

    def test_pole(self):
        with pytest.raises(DomainError):
            hurwitz_zeta(1, 0.5)

    def test_negative_integers_are_bernoulli(self):
        polys = {
            1: lambda a: a - 0.5,
            2: lambda a: a * a - a + 1 / 6,
            3: lambda a: a ** 3 - 1.5 * a * a + 0.5 * a,
            4: lambda a: a ** 4 - 2 * a ** 3 + a * a - 1 / 30,
        }
        for n in range(4):
            for a in (0.25, 1.0, 2.3 + 0.7j):
                want = -polys[n + 1](a) / (n + 1)
                assert abs(hurwitz_zeta(-n, a) - want) < 1e-10 * max(1, abs(want))

    def test_bernoulli_tables(self):
        b = bernoulli_numbers(6)
        assert [str(x) for x in b] == ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42"]
        assert bernoulli_poly(2, 0.25) == pytest.approx(0.0625 - 0.25 + 1 / 6)


class TestPolylog:
    def test_zero(self):
        assert polylog(3.5, 0) == 0

    def test_log(self):
        assert polylog(1, 0.5) == pytest.approx(math.log(2), rel=1e-14)

    def test_catalan_part(self):
        n = np.arange(1_000_000, dtype=float)
        direct = float(np.sum((-1) ** n / (2 * n + 1) ** 2))
        # alternating tail bound: the first omitted term
        assert abs(polylog(2, 1j).imag - direct) < 1e-12 + 1 / (2e6 + 1) ** 2
        assert polylog(2, 1j).real == pytest.approx(-math.pi ** 2 / 48, rel=1e-13)

    def test_frozen(self):
        assert polylog(3, 0.5) == pytest.approx(0.5372131936080402, rel=1e-14)
        want = complex(0.27415567780803773, 1.0149416064096537)
        assert rel(polylog(2, cmath.exp(1j * math.pi / 3)), want) < 1e-11

    def test_region(self):
        with pytest.raises(RegionError):
            polylog(0.5, 1.2)


class TestDerivatives:
    def test_constant(self):
        for order in (1, 2, 3):
            # only rounding survives, amplified by order! / r^order
            assert abs(s_derivative(lambda s: 4.2 + 0j, 0.3, order)) < 1e-10

    def test_square(self):
        assert s_derivative(lambda s: s * s, 1.0, 1) == pytest.approx(2, rel=1e-13)

    def test_order_validation(self):
        with pytest.raises(DomainError):
            s_derivative(lambda s: s, 0, 0)

    def test_quarter_shift_against_finite_differences(self):
        fd = richardson_derivative(lambda s: hurwitz_zeta(s, 0.25), 0.5)
        assert abs(hurwitz_zeta_sderiv(0.5, 0.25) - fd) < 1e-8 * abs(fd)

    @pytest.mark.parametrize("a,order,want", ZETA_DERIV_REF)
    def test_frozen(self, a, order, want):
        assert rel(hurwitz_zeta_sderiv(0.5, a, order), want) < 1e-10

    def test_lerch_at_zero_z(self):
        v, s = 1.7, 1.3
        want = -v ** -s * math.log(v)
        assert lerch_phi_sderiv(0, s, v) == pytest.approx(want, rel=1e-10)

    def test_lerch_series_oracle(self):
        n = np.arange(200, dtype=float)
        want = -np.sum(0.5 ** n * np.log(n + 1) / (n + 1) ** 2)
        assert lerch_phi_sderiv(LerchArgs(0.5, 2, 1)) == pytest.approx(want, rel=1e-10)

    def test_lerch_cauchy_against_finite_differences(self):
        for z in (0.6 + 0.2j, cmath.exp(0.8j)):
            fd = richardson_derivative(lambda s: lerch_phi(z, s, 0.8), 1.5)
            assert rel(lerch_phi_sderiv(z, 1.5, 0.8), fd) < 1e-7


class TestStieltjes:
    def test_classical_constant(self):
        assert stieltjes_gamma1(1) == pytest.approx(stieltjes_direct(), abs=1e-12)

    @pytest.mark.parametrize("a", list(STIELTJES_REF))
    def test_frozen(self, a):
        assert rel(stieltjes_gamma1(a), STIELTJES_REF[a]) < 1e-11

    def test_doubling(self):
        g1 = stieltjes_direct()
        ln2 = math.log(2)
        want = g1 - 2 * EULER_GAMMA * ln2 - ln2 ** 2
        assert stieltjes_gamma1(0.5) == pytest.approx(want, rel=1e-11)

    def test_constant_term(self):
        a, s = 0.7, 1 + 1e-6
        val = hurwitz_zeta(s, a) - 1 / (s - 1)
        assert abs(val + digamma(a)) < 1e-5

    def test_domain(self):
        with pytest.raises(DomainError):
            stieltjes_gamma1(-0.5)


unit = st.floats(0, 2 * math.pi)


@given(st.floats(0.2, 0.8), unit, st.floats(1, 4), st.floats(-1, 1),
       st.floats(0.5, 3), st.floats(-1, 1))
def test_series_integral_agree(r, phi, sr, si, vr, vi):
    z, s, v = r * cmath.exp(1j * phi), complex(sr, si), complex(vr, vi)
    a, b = lerch_phi_series(z, s, v), lerch_phi_integral(z, s, v)
    assert abs(a - b) < 1e-9 * abs(b)


@given(st.floats(0.2, 1.0), unit, st.floats(1, 4), st.floats(-1, 1),
       st.floats(0.5, 3), st.floats(-1, 1))
def test_contiguous_relation(r, phi, sr, si, vr, vi):
    z, s, v = r * cmath.exp(1j * phi), complex(sr, si), complex(vr, vi)
    if abs(z - 1) < 1e-3:
        z = -z
    lhs = lerch_phi(z, s, v)
    rhs = z * lerch_phi(z, s, v + 1) + v ** -s
    assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(lhs))


@given(st.floats(0.05, 0.9), unit, st.floats(-1, 4), st.floats(-1, 1))
def test_polylog_duplication(r, phi, sr, si):
    z, s = r * cmath.exp(1j * phi), complex(sr, si)
    lhs = polylog(s, z) + polylog(s, -z)
    rhs = 2 ** (1 - s) * polylog(s, z * z)
    assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(rhs))


@given(st.floats(0.2, 3), st.floats(-0.5, 0.5))
def test_zeta_derivative_methods_agree(ar, ai):
    a = complex(ar, ai)
    fd = richardson_derivative(lambda s: hurwitz_zeta(s, a), 0.5)
    assert abs(hurwitz_zeta_sderiv(0.5, a) - fd) < 1e-8 * max(1.0, abs(fd))
