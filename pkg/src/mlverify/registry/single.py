"""Single integrals of the generalized Mittag-Leffler function E_{alpha,beta}."""

from __future__ import annotations

import cmath
import math

import numpy as np

from ..complexfn import (EULER_GAMMA, binom, digamma, gamma, hyp2f1, log_gamma, rgamma,
                         upper_incomplete_gamma)
from ..mittag import MLParams, mellin_ml_neg, ml
from ..quad import AlgebraicDecay, ExpDecay, SingularityHint
from ..zetafam import (hurwitz_zeta, hurwitz_zeta_sderiv, lerch_phi, lerch_phi_sderiv,
                       stieltjes_gamma1)
from .core import Component, Constraint, Integrand, IdentitySpec, register
from .series import SumAxis, adaptive_sum

PI = math.pi
TOL_1D = 1e-6
SERIES_TOL = 1e-13
TRUNCATED = frozenset({"series-with-truncation"})


def _c(p, name) -> complex:
    return complex(p[name])


def _re(p, name) -> float:
    return complex(p[name]).real


def _is_nonneg_int(z: complex) -> bool:
    return z.imag == 0 and z.real >= 0 and z.real == round(z.real)


def _ml_factor(p):
    """x -> E_{alpha,beta}(delta x^gamma) as a function of the array x."""
    prm = MLParams(_re(p, "alpha"), _c(p, "beta"))
    delta, gam = _c(p, "delta"), _c(p, "gamma")
    return lambda x: ml(prm, delta * x ** gam)


def _guarded(decay: np.ndarray, t: np.ndarray, rest) -> np.ndarray:
    """decay * rest(t), skipping nodes where the decay has underflowed.

    A growing E factor is then never evaluated where it cannot matter.
    """
    decay = np.asarray(decay)
    live = decay != 0
    out = np.zeros(decay.shape, dtype=complex)
    if np.any(live):
        out[live] = decay[live] * rest(np.asarray(t)[live])
    return out


def _flat(fn, A):
    A = np.asarray(A)
    return np.asarray(fn(A.ravel())).reshape(A.shape)


def _semiinf(f, left: float, rate: float | None, power: float | None = None) -> Integrand:
    decay = ExpDecay(rate) if rate is not None else (
        AlgebraicDecay(power) if power is not None else None)
    return Integrand("semiinf", f, lower=0.0, hint=SingularityHint(left, decay))


def _on_unit_interval(g, left: float, rate: float) -> Integrand:
    """Integrand on (0, 1) in x, written as g(y) after x = e^{-y} (dx = e^{-y} dy)."""
    return _semiinf(g, left, rate)


def _alpha_real(p) -> bool:
    a = _c(p, "alpha")
    return a.imag == 0 and 0 < a.real <= 2


ALPHA = Constraint("alpha real with 0 < alpha <= 2", _alpha_real)
BETA = Constraint("Re(beta) > 0", lambda p: _re(p, "beta") > 0)


def _growth_ok(p, scale: str) -> bool:
    # E_{alpha,beta}(delta t^gamma) ~ exp((delta t^gamma)^{1/alpha}) must lose to e^{-t^scale}
    g, a = _re(p, "gamma"), _re(p, "alpha")
    return g / a < (1.0 if scale == "1" else _re(p, scale))


# ---------------------------------------------------------------------------
# Mellin transform and Lerch integral representation


def _mellin_lhs(p):
    s, b = _c(p, "s"), _re(p, "b")
    prm = MLParams(b, 1.0)

    def f(u):
        return np.exp((s - 1) * np.log(u)) * ml(prm, -u)

    if b == 1.0:
        return _semiinf(f, s.real - 1, 1.0)
    return _semiinf(f, s.real - 1, None, s.real - 2)


def _lerch_int_lhs(p):
    z, s, v = _c(p, "z"), _c(p, "s"), _c(p, "v")
    norm = complex(rgamma(s))

    def f(t):
        return norm * np.exp((s - 1) * np.log(t) - v * t) / ((1 - z) - z * np.expm1(-t))

    return _semiinf(f, s.real - 1, v.real)


def _lerch_direct(p):
    z, s, v = _c(p, "z"), _c(p, "s"), _c(p, "v")
    return adaptive_sum(lambda n: np.exp(n * np.log(z) - s * np.log(v + n)),
                        [SumAxis()], SERIES_TOL, start=64)


# ---------------------------------------------------------------------------
# finite-interval theorem and its triple series


def triple_series(p, tol: float = SERIES_TOL) -> complex:
    """Triple sum over (f, h, j) for the finite-interval theorem.

    The h axis stops at lambda for a nonnegative integer lambda and the j
    axis collapses to one term when theta = 0.
    """
    a, b, k, m = _c(p, "a"), _c(p, "b"), _c(p, "k"), _c(p, "m")
    gam, dlt, alp, bet = _c(p, "gamma"), _c(p, "delta"), _c(p, "alpha"), _c(p, "beta")
    mu, nu, lam, tau, th = _c(p, "mu"), _c(p, "nu"), _c(p, "lambda"), _c(p, "tau"), _c(p, "theta")
    la = cmath.log(1 / (a * b))
    la_a = cmath.log(a)

    def term(f, h, j):
        e = 1 + m + f * gam + h * mu + j * tau
        e_b = np.broadcast_to(e, np.broadcast_shapes(f.shape, h.shape, j.shape))
        uniq, inv = np.unique(e_b.ravel(), return_inverse=True)
        ig = np.asarray(upper_incomplete_gamma(1 + k, uniq * la)).reshape(-1)[inv]
        ig = ig.reshape(e_b.shape)
        powers = (_pow(dlt, f) * _pow(-th, j) * _pow(nu, h) * binom(lam, h)
                  * rgamma(f * alp + bet) * rgamma(j + 1.0))
        return np.exp(-e * la_a) * powers * ig / e ** (k + 1)

    axes = [SumAxis(),
            SumAxis(size=int(lam.real) + 1 if _is_nonneg_int(lam) else None),
            SumAxis(size=1 if th == 0 else None)]
    return adaptive_sum(term, axes, tol)


def _pow(base: complex, n: np.ndarray) -> np.ndarray:
    base = complex(base)
    if base == 0:
        return np.where(n == 0, 1.0, 0.0)
    return np.exp(n * cmath.log(base))


def _gm_main_lhs(p):
    a, b, k, m = _c(p, "a"), _re(p, "b"), _c(p, "k"), _c(p, "m")
    mu, nu, lam, tau, th = _c(p, "mu"), _c(p, "nu"), _c(p, "lambda"), _c(p, "tau"), _c(p, "theta")
    E = _ml_factor(p)
    if k == 0:
        logk = lambda x: 1.0
    else:
        logk = lambda x: np.exp(k * np.log(np.log(1 / (a * x)) + 0j))

    def f(x):
        base = np.exp(-th * x ** tau + m * np.log(x)) * np.exp(lam * np.log(1 + nu * x ** mu + 0j))
        return base * logk(x) * E(x)

    return Integrand("finite", f, lower=0.0, upper=b, hint=SingularityHint(m.real))


# ---------------------------------------------------------------------------
# semi-infinite examples


def _mitt1_lhs(p):
    m, mu, nu, lam, tau, th = (_c(p, n) for n in ("m", "mu", "nu", "lambda", "tau", "theta"))
    E = _ml_factor(p)

    def f(x):
        return _guarded(np.exp(-th * x ** tau), x, lambda t: np.exp(
            m * np.log(t) + lam * np.log(1 + nu * t ** mu + 0j)) * E(t))

    return _semiinf(f, m.real, th.real)


def _mitt1_rhs(p):
    m, mu, nu, lam, tau, th = (_c(p, n) for n in ("m", "mu", "nu", "lambda", "tau", "theta"))
    gam, dlt, alp, bet = (_c(p, n) for n in ("gamma", "delta", "alpha", "beta"))
    lth = cmath.log(th)

    def term(j, k):
        lg = (log_gamma((1 + m + j * gam + k * mu) / tau) - log_gamma(j * alp + bet)
              - (j * gam + k * mu) / tau * lth)
        return _pow(dlt, j) * _pow(nu, k) * binom(lam, k) * np.exp(lg)

    integer = _is_nonneg_int(lam)
    axes = [SumAxis(), SumAxis(size=int(lam.real) + 1 if integer else None,
                               asymptotic=not integer)]
    pref = 1 / (tau * cmath.exp((m + 1) / tau * lth))
    return pref * adaptive_sum(term, axes, SERIES_TOL)


def _stretched_lhs(p, g):
    """e^{-s t^tau} t^{m-1} g(t) E(delta t^gamma) on (0, inf)."""
    m, s, tau = _c(p, "m"), _c(p, "s"), _c(p, "tau")
    E = _ml_factor(p)

    def f(t):
        return _guarded(np.exp(-s * t ** tau), t,
                        lambda x: np.exp((m - 1) * np.log(x)) * g(x) * E(x))

    return f


def _mitt2_family(kind: str):
    """Log/arctanh examples: kind is 'log1p', 'logdiff' or 'arctanh'."""

    def lhs(p):
        mu, nu = _c(p, "mu"), _c(p, "nu")
        if kind == "log1p":
            g = lambda t: np.log(1 + nu * t ** mu + 0j)
        elif kind == "logdiff":
            g = lambda t: np.log(1 - nu * nu * t ** (2 * mu) + 0j)
        else:
            g = lambda t: np.arctanh(nu * t ** mu + 0j)
        return _semiinf(_stretched_lhs(p, g), (_c(p, "m") + mu).real - 1, _re(p, "s"))

    def rhs(p):
        m, s, tau, mu, nu = (_c(p, n) for n in ("m", "s", "tau", "mu", "nu"))
        gam, dlt, alp, bet = (_c(p, n) for n in ("gamma", "delta", "alpha", "beta"))
        ls = cmath.log(s)
        x_j = cmath.log(dlt) - gam / tau * ls if dlt != 0 else None
        base_h = -nu if kind == "log1p" else nu
        x_h = cmath.log(base_h) - mu / tau * ls

        def term(j, h):
            lg = log_gamma((m + j * gam + mu + h * mu) / tau) - log_gamma(j * alp + bet)
            jpow = np.exp(j * x_j) if x_j is not None else np.where(j == 0, 1.0, 0.0)
            val = np.exp(lg + h * x_h) * jpow / (1 + h)
            if kind == "logdiff":
                val = val * (np.cos(PI * h) - 1)
            elif kind == "arctanh":
                val = val * (1 + np.cos(PI * h)) / 2
            return val

        pref = nu / (tau * cmath.exp((m + mu) / tau * ls))
        return pref * adaptive_sum(term, [SumAxis(), SumAxis(asymptotic=True)], SERIES_TOL)

    return lhs, rhs


def _mitt3_lhs(p):
    return _semiinf(_stretched_lhs(p, lambda t: 1.0), _re(p, "m") - 1, _re(p, "s"))


def _mitt3_rhs(p):
    m, s, tau, gam, dlt, alp, bet = (_c(p, n) for n in
                                     ("m", "s", "tau", "gamma", "delta", "alpha", "beta"))
    ls = cmath.log(s)

    def term(j):
        lg = log_gamma((m + j * gam) / tau) - log_gamma(j * alp + bet) - j * gam / tau * ls
        return _pow(dlt, j) * np.exp(lg)

    return adaptive_sum(term, [SumAxis()], SERIES_TOL) / (tau * cmath.exp(m / tau * ls))


def _laplace_lhs_of(p, power: str, arg_scale: str, exponent: str):
    """e^{-s t} t^{power-1} E_{alpha,beta}(arg_scale t^exponent)."""
    s, q = _c(p, "s"), _c(p, power)
    prm = MLParams(_re(p, "alpha"), _c(p, "beta"))
    z0, ex = _c(p, arg_scale), _c(p, exponent)

    def f(t):
        return _guarded(np.exp(-s * t), t,
                        lambda x: np.exp((q - 1) * np.log(x)) * ml(prm, z0 * x ** ex))

    return _semiinf(f, q.real - 1, s.real)


def _laplace_rhs(p):
    m, s, gam, dlt, alp, bet = (_c(p, n) for n in ("m", "s", "gamma", "delta", "alpha", "beta"))
    ls = cmath.log(s)

    def term(j):
        return _pow(dlt, j) * np.exp(log_gamma(m + j * gam) - log_gamma(bet + j * alp)
                                     - j * gam * ls)

    return adaptive_sum(term, [SumAxis()], SERIES_TOL) * cmath.exp(-m * ls)


def _errata_rhs(p):
    q, gam, alp, bet, a, s = (_c(p, n) for n in ("p", "gamma", "alpha", "beta", "a", "s"))
    ls = cmath.log(s)

    def term(n):
        return _pow(a, n) * np.exp(-(q + n * gam) * ls + log_gamma(q + n * gam)
                                   - log_gamma(n * alp + bet))

    return adaptive_sum(term, [SumAxis()], SERIES_TOL)


def _errata_misprint(p):
    q, gam, alp, bet, a, s = (_c(p, n) for n in ("p", "gamma", "alpha", "beta", "a", "s"))
    ls = cmath.log(s)

    def term(n):
        return _pow(a, n) * np.exp(-n * alp * ls + log_gamma(q + gam * n)
                                   - log_gamma(bet + alp * n))

    return cmath.exp(-q * ls) * adaptive_sum(term, [SumAxis()], SERIES_TOL)


def _laplace_ml_growth(p) -> bool:
    a, alp = _c(p, "a"), _re(p, "alpha")
    if a == 0 or abs(cmath.phase(a)) >= alp * PI / 2:
        return True
    return _re(p, "s") > cmath.exp(cmath.log(a) / alp).real


def _laplace_ml_rhs(p):
    alp, bet, a, s = (_c(p, n) for n in ("alpha", "beta", "a", "s"))
    sa = cmath.exp(alp * cmath.log(s))
    return cmath.exp((alp - bet) * cmath.log(s)) / (sa - a)


# ---------------------------------------------------------------------------
# unit-interval examples (x = e^{-y})


def _unit_pieces(p):
    """Common factors of the (0,1) examples as functions of y = -log x."""
    th, tau = _c(p, "theta"), _c(p, "tau")
    prm = MLParams(_re(p, "alpha"), _c(p, "beta"))
    dlt, gam = _c(p, "delta"), _c(p, "gamma")

    def common(y):
        return np.exp(-th * np.exp(-tau * y) - y) * ml(prm, dlt * np.exp(-gam * y))

    return common


def _ml_on_y(p):
    prm = MLParams(_re(p, "alpha"), _c(p, "beta"))
    dlt, gam = _c(p, "delta"), _c(p, "gamma")
    return lambda y: np.exp(-y) * ml(prm, dlt * np.exp(-gam * y))


def _diff_pow(m: complex, s: complex, y):
    """x^m - x^s at x = e^{-y}, stable as y -> 0."""
    return -np.exp(-m * y) * np.expm1(-(s - m) * y)


def _double_sum_jl(p, inner):
    """Sum over (l, j) of delta^l (-theta)^j / (j! Gamma(l alpha + beta)) inner(A_shift)."""
    th, tau, gam, dlt, alp, bet = (_c(p, n) for n in
                                   ("theta", "tau", "gamma", "delta", "alpha", "beta"))

    def term(l, j):
        shift = l * gam + j * tau
        w = _pow(dlt, l) * _pow(-th, j) * rgamma(j + 1.0) * rgamma(l * alp + bet)
        return w * inner(shift)

    return adaptive_sum(term, [SumAxis(), SumAxis(size=1 if th == 0 else None)], SERIES_TOL)


def _mitt_lerch_lhs(p):
    m, k, mu, nu = (_c(p, n) for n in ("m", "k", "mu", "nu"))
    common = _unit_pieces(p)
    return _on_unit_interval(
        lambda y: common(y) * np.exp(-m * y + k * np.log(y)) / (1 + nu * np.exp(-mu * y)),
        k.real, 1 + m.real)


def _mitt_lerch_rhs(p):
    m, k, mu, nu = (_c(p, n) for n in ("m", "k", "mu", "nu"))

    def inner(shift):
        A = (1 + m + shift) / mu
        vals = lerch_phi(-nu, 1 + k, np.ravel(A)).reshape(np.shape(A))
        return vals

    return gamma(1 + k) / mu ** (k + 1) * _double_sum_jl(p, inner)


def _gamma_diff_lhs(p):
    m, s, mu = _c(p, "m"), _c(p, "s"), _c(p, "mu")
    common = _unit_pieces(p)
    return _on_unit_interval(
        lambda y: common(y) * _diff_pow(m, s, y) / ((1 + np.exp(-2 * mu * y)) * y),
        0.0, 1 + min(m.real, s.real))


def _gamma_diff_rhs(p):
    m, s, mu = _c(p, "m"), _c(p, "s"), _c(p, "mu")

    def inner(shift):
        def lg(q, extra):
            return log_gamma((1 + q + shift + extra) / (4 * mu))
        return lg(m, 0) + lg(s, 2 * mu) - lg(s, 0) - lg(m, 2 * mu)

    return _double_sum_jl(p, inner)


def _malmsten_lhs(p):
    m, mu = _c(p, "m"), _c(p, "mu")
    common = _unit_pieces(p)
    return _on_unit_interval(
        lambda y: common(y) * np.exp(-m * y) * np.log(y) / (1 + np.exp(-mu * y)),
        0.0, 1 + m.real)


def _malmsten_rhs(p):
    m, mu = _c(p, "m"), _c(p, "mu")
    c0 = EULER_GAMMA + cmath.log(2 * mu)

    def inner(shift):
        a0 = (1 + m + shift) / (2 * mu)
        a1 = (1 + m + shift + mu) / (2 * mu)
        return (c0 * (digamma(a0) - digamma(a1)) - _flat(stieltjes_gamma1, a0)
                + _flat(stieltjes_gamma1, a1)) / (2 * mu)

    return _double_sum_jl(p, inner)


def _mitt_hurwitz_lhs(p):
    m, k, mu = _c(p, "m"), _c(p, "k"), _c(p, "mu")
    common = _unit_pieces(p)
    return _on_unit_interval(
        lambda y: common(y) * np.exp(-m * y + k * np.log(y)) / (-np.expm1(-mu * y)),
        k.real - 1, 1 + m.real)


def _mitt_hurwitz_rhs(p):
    m, k, mu = _c(p, "m"), _c(p, "k"), _c(p, "mu")

    def inner(shift):
        A = (1 + m + shift) / mu
        return np.asarray(hurwitz_zeta(1 + k, np.ravel(A))).reshape(np.shape(A))

    return cmath.exp((-1 - k) * cmath.log(mu)) * gamma(1 + k) * _double_sum_jl(p, inner)


def digamma_diff_lhs(p, k: complex = 0.0) -> Integrand:
    """(x^m - x^s) log^k(1/x) E / (x^mu - 1) with the theta weight; k = 0 is
    the catalog entry, k > 0 splits into two convergent pieces."""
    m, s, mu = _c(p, "m"), _c(p, "s"), _c(p, "mu")
    k = complex(k)
    common = _unit_pieces(p)
    return _on_unit_interval(
        lambda y: common(y) * _diff_pow(m, s, y) * np.exp(k * np.log(y)) / np.expm1(-mu * y),
        k.real, 1 + min(m.real, s.real))


def _digamma_diff_rhs(p):
    m, s, mu = _c(p, "m"), _c(p, "s"), _c(p, "mu")

    def inner(shift):
        return (digamma((1 + m + shift) / mu) - digamma((1 + s + shift) / mu)) / mu

    return _double_sum_jl(p, inner)


def _zeta_half_lhs(p):
    m, s, mu = _c(p, "m"), _c(p, "s"), _c(p, "mu")
    common = _unit_pieces(p)
    return _on_unit_interval(
        lambda y: common(y) * _diff_pow(m, s, y) * np.log(y) / (np.expm1(-mu * y) * np.sqrt(y)),
        -0.5, 1 + min(m.real, s.real))


def _zeta_vec(s, A):
    return _flat(lambda a: hurwitz_zeta(s, a), A)


def _zeta_deriv_vec(s, A, order):
    return _flat(lambda a: hurwitz_zeta_sderiv(s, a, order), A)


def _zeta_half_rhs(p):
    m, s, mu = _c(p, "m"), _c(p, "s"), _c(p, "mu")
    c0 = EULER_GAMMA + math.log(4) + cmath.log(mu)

    def inner(shift):
        am = (1 + m + shift) / mu
        a_s = (1 + s + shift) / mu
        return ((_zeta_vec(0.5, am) - _zeta_vec(0.5, a_s)) * c0
                - _zeta_deriv_vec(0.5, am, 1) + _zeta_deriv_vec(0.5, a_s, 1))

    return math.sqrt(PI) / cmath.sqrt(mu) * _double_sum_jl(p, inner)


def _malmsten_zeta2_lhs(p):
    m, s, mu = _c(p, "m"), _c(p, "s"), _c(p, "mu")
    common = _unit_pieces(p)
    return _on_unit_interval(
        lambda y: common(y) * _diff_pow(m, s, y) * np.log(y) / ((1 + np.exp(-mu * y)) * y),
        0.0, 1 + min(m.real, s.real))


def _malmsten_zeta2_rhs(p):
    m, s, mu = _c(p, "m"), _c(p, "s"), _c(p, "mu")
    c0 = 2 * cmath.log(2 * mu * math.exp(EULER_GAMMA))

    def inner(shift):
        def A(q, extra):
            return (1 + q + shift + extra) / (2 * mu)
        lg = (log_gamma(A(s, 0)) + log_gamma(A(m, mu)) - log_gamma(A(m, 0))
              - log_gamma(A(s, mu)))
        z2 = (_zeta_deriv_vec(0, A(m, 0), 2) - _zeta_deriv_vec(0, A(s, 0), 2)
              - _zeta_deriv_vec(0, A(m, mu), 2) + _zeta_deriv_vec(0, A(s, mu), 2))
        return (c0 * lg + z2) / 2

    return _double_sum_jl(p, inner)


def _log2denom_lhs(p):
    m, nu, a = _c(p, "m"), _c(p, "nu"), _c(p, "a")
    la2 = cmath.log(a) ** 2
    E = _ml_on_y(p)
    return _on_unit_interval(
        lambda y: E(y) * np.exp(-m * y) / (np.sqrt(1 + nu * np.exp(-2 * y) + 0j) * (la2 - y * y)),
        0.0, 1 + m.real)


def _log2denom_rhs(p):
    m, nu, a, gam, dlt, alp, bet = (_c(p, n) for n in
                                    ("m", "nu", "a", "gamma", "delta", "alpha", "beta"))
    la = cmath.log(a)
    g0 = np.vectorize(lambda z: complex(upper_incomplete_gamma(0, z)), otypes=[complex])

    def term(f, h):
        e = 1 + 2 * h + m + f * gam
        w = _pow(dlt, f) * _pow(nu, h) * binom(-0.5, h) * rgamma(f * alp + bet)
        e_b = np.broadcast_to(e, np.broadcast_shapes(f.shape, h.shape))
        first = -np.exp(-(e_b - 1) * la) * g0(-e_b * la)
        second = np.exp((e_b + 1) * la) * g0(e_b * la)
        return w * (first + second)

    return adaptive_sum(term, [SumAxis(), SumAxis()], SERIES_TOL) / (2 * a * la)


def _hyp_lhs(p):
    b, lam, nu, m, mu = _re(p, "b"), _c(p, "lambda"), _c(p, "nu"), _c(p, "m"), _c(p, "mu")
    E = _ml_factor(p)

    def f(x):
        return np.exp((m - 1) * np.log(x) + lam * np.log(1 - nu * x ** mu + 0j)) * E(x)

    return Integrand("finite", f, lower=0.0, upper=b, hint=SingularityHint(m.real - 1))


def _hyp_rhs(p):
    b, lam, nu, m, mu = (_c(p, n) for n in ("b", "lambda", "nu", "m", "mu"))
    gam, dlt, alp, bet = (_c(p, n) for n in ("gamma", "delta", "alpha", "beta"))
    z = cmath.exp(mu * cmath.log(b)) * nu
    lb = cmath.log(b)

    def term(f):
        q = m + f * gam
        hyp = np.array([complex(hyp2f1(-lam, qi / mu, (qi + mu) / mu, z)) for qi in np.ravel(q)])
        return np.exp(q * lb) * _pow(dlt, f) * rgamma(f * alp + bet) / q * hyp.reshape(np.shape(q))

    return adaptive_sum(term, [SumAxis()], SERIES_TOL, start=24)


def _lerchsum_weight(p, f):
    gam, dlt, alp, bet, m, mu = (_c(p, n) for n in ("gamma", "delta", "alpha", "beta", "m", "mu"))
    return _pow(dlt, f) * rgamma(f * alp + bet), (1 + m + f * gam) / mu


def _lerchsum_lhs(p):
    m, k, n, mu, nu = (_c(p, q) for q in ("m", "k", "n", "mu", "nu"))
    E = _ml_on_y(p)
    sign = (-1.0) ** int(n.real)
    return _on_unit_interval(
        lambda y: E(y) * sign * np.exp(-m * y + (k + n) * np.log(y)) / (1 + nu * np.exp(-mu * y)),
        (k + n).real, 1 + m.real)


def _lerchsum_rhs(p):
    k, n, mu, nu = (_c(p, q) for q in ("k", "n", "mu", "nu"))

    def term(f):
        w, A = _lerchsum_weight(p, f)
        return w * lerch_phi(-nu, 1 + k + n, np.ravel(A)).reshape(np.shape(A))

    pref = -PI * cmath.exp((-1 - k - n) * cmath.log(mu)) / cmath.sin(k * PI) * rgamma(-k - n)
    return pref * adaptive_sum(term, [SumAxis()], SERIES_TOL)


def _kderiv_lhs(p):
    m, n, mu, nu = (_c(p, q) for q in ("m", "n", "mu", "nu"))
    E = _ml_on_y(p)
    sign = (-1) ** int(n.real)
    return _on_unit_interval(
        lambda y: E(y) * sign * np.exp(-m * y + (n - 0.5) * np.log(y)) * np.log(y)
        / (1 + nu * np.exp(-mu * y)),
        n.real - 0.5, 1 + m.real)


def _kderiv_rhs(p):
    n, mu, nu = (_c(p, q) for q in ("n", "mu", "nu"))
    s0 = 0.5 + n
    c0 = cmath.log(mu) - digamma(0.5 - n)

    def term(f):
        w, A = _lerchsum_weight(p, f)
        flat = np.ravel(A)
        phi = lerch_phi(-nu, s0, flat)
        dphi = lerch_phi_sderiv(-nu, s0, flat)
        return w * (phi * c0 - dphi).reshape(np.shape(A))

    pref = -PI * cmath.exp((-0.5 - n) * cmath.log(mu)) * rgamma(0.5 - n)
    return pref * adaptive_sum(term, [SumAxis()], SERIES_TOL)


def _lerchsum_diff_lhs(p):
    m, s, k, mu, nu = (_c(p, q) for q in ("m", "s", "k", "mu", "nu"))
    E = _ml_on_y(p)
    # (x^s - x^m) / log x = (x^m - x^s) / y
    return _on_unit_interval(
        lambda y: E(y) * _diff_pow(m, s, y) * np.exp((k - 1) * np.log(y))
        / (1 + nu * np.exp(-mu * y)),
        k.real, 1 + min(m.real, s.real))


def _lerchsum_diff_rhs(p):
    m, s, k, mu, nu = (_c(p, q) for q in ("m", "s", "k", "mu", "nu"))
    gam = _c(p, "gamma")

    def term(f):
        w, Am = _lerchsum_weight(p, f)
        As = (1 + s + f * gam) / mu
        flat_m, flat_s = np.ravel(Am), np.ravel(As)
        d = lerch_phi(-nu, k, flat_m) - lerch_phi(-nu, k, flat_s)
        return w * d.reshape(np.shape(Am))

    pref = PI * cmath.exp(-k * cmath.log(mu)) / cmath.sin(k * PI) * rgamma(1 - k)
    return pref * adaptive_sum(term, [SumAxis()], SERIES_TOL)


# ---------------------------------------------------------------------------
# catalog entries


def _con(text, fn):
    return Constraint(text, fn)


def _positive(name):
    return _con(f"Re({name}) > 0", lambda p: _re(p, name) > 0)


def _gt(name, v):
    return _con(f"Re({name}) > {v}", lambda p: _re(p, name) > v)


NU_UNIT = _con("|nu| <= 1 and nu != -1",
               lambda p: abs(_c(p, "nu")) <= 1 and _c(p, "nu") != -1)
K_NONINT = _con("k is not an integer",
                lambda p: not (_c(p, "k").imag == 0 and _re(p, "k") == round(_re(p, "k"))))
N_NATURAL = _con("n = 0, 1, 2, ...", lambda p: _is_nonneg_int(_c(p, "n")))
THETA_WEIGHT = (_gt("tau", 1), _positive("mu"))

_UNIT_BASE = dict(tau=1.5, theta=0.4, gamma=1.2, delta=0.5, alpha=0.7, beta=1.1, mu=1.5)
_SUM_BASE = dict(m=0.3, mu=1.5, nu=0.6, gamma=1.2, delta=0.5, alpha=0.7, beta=1.1)
_MITT2_BASE = dict(m=0.5, tau=2, s=1, mu=0.5, nu=0.3, gamma=1.2, delta=0.3, alpha=0.7, beta=1.1)


def register_mechanism():
    register(IdentitySpec(
        id="DI-MELLIN",
        anchor="Mellin transform of E_b(-u): Gamma(s) Gamma(1-s) / Gamma(1-b s)",
        dimension=1,
        params=("s", "b"),
        rhs_params=frozenset({"s", "b"}),
        lhs=_mellin_lhs,
        rhs=lambda p: mellin_ml_neg(_c(p, "s"), _re(p, "b")),
        domain=(_con("0 < Re(s) < 1", lambda p: 0 < _re(p, "s") < 1),
                _con("b real with 0 < b < 2",
                     lambda p: _c(p, "b").imag == 0 and 0 < _re(p, "b") < 2)),
        default_samples=({"s": 0.5, "b": 0.5}, {"s": 0.3, "b": 0.75}, {"s": 0.7, "b": 0.25}),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="LERCH-INT",
        anchor="Lerch transcendent: integral representation against the defining series",
        dimension=1,
        params=("z", "s", "v"),
        rhs_params=frozenset({"z", "s", "v"}),
        lhs=_lerch_int_lhs,
        rhs=_lerch_direct,
        domain=(_con("|z| < 1", lambda p: abs(_c(p, "z")) < 1), _positive("s"), _positive("v")),
        default_samples=({"z": 0.5, "s": 2, "v": 1}, {"z": -0.7 + 0.2j, "s": 1.5, "v": 0.75}),
        tol=TOL_1D,
    ))


def register_entries():
    register(IdentitySpec(
        id="GM-MAIN",
        anchor="generalized Mittag-Leffler integral over [0, b]: triple series with upper "
               "incomplete gamma",
        dimension=1,
        params=("a", "b", "k", "m", "gamma", "delta", "alpha", "beta", "mu", "nu",
                "lambda", "tau", "theta"),
        rhs_params=frozenset({"a", "b", "k", "m", "gamma", "delta", "alpha", "beta", "mu",
                              "nu", "lambda", "tau", "theta"}),
        lhs=_gm_main_lhs,
        rhs=triple_series,
        domain=(_positive("tau"), _gt("mu", 1), ALPHA, BETA,
                _con("b real with 0 < b", lambda p: _c(p, "b").imag == 0 and _re(p, "b") > 0),
                _con("a real with 0 < a b < 1",
                     lambda p: _c(p, "a").imag == 0 and 0 < _re(p, "a") * _re(p, "b") < 1),
                _gt("m", -1),
                _con("|nu b^mu| < 1 unless lambda is a nonnegative integer",
                     lambda p: _is_nonneg_int(_c(p, "lambda"))
                     or abs(_c(p, "nu") * _re(p, "b") ** _c(p, "mu")) < 1)),
        default_samples=(dict(b=0.5, a=0.5, k=1, m=1, gamma=2, delta=0.3, alpha=0.7, beta=1.1,
                              mu=1.5, nu=0.2, **{"lambda": -1}, tau=1, theta=0.5),
                         dict(b=0.8, a=1.0, k=0.5, m=0.5, gamma=1.2, delta=0.5, alpha=0.7,
                              beta=1.1, mu=2.0, nu=0.5, **{"lambda": 2}, tau=1.5, theta=0.4)),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-MITT1",
        anchor="semi-infinite stretched-exponential form, k -> 0 and a -> 1",
        dimension=1,
        params=("m", "tau", "theta", "mu", "nu", "lambda", "gamma", "delta", "alpha", "beta"),
        rhs_params=frozenset({"m", "tau", "theta", "mu", "nu", "lambda", "gamma", "delta",
                              "alpha", "beta"}),
        lhs=_mitt1_lhs, rhs=_mitt1_rhs,
        domain=(_positive("theta"), _positive("tau"), _positive("mu"), ALPHA, BETA,
                _gt("m", -1),
                _con("Re(gamma)/alpha < Re(tau)", lambda p: _growth_ok(p, "tau"))),
        default_samples=(dict(m=0.5, tau=2, theta=1, mu=1.5, nu=0.3, **{"lambda": 2},
                              gamma=1.2, delta=0.3, alpha=0.7, beta=1.1),
                         dict(m=0.5, tau=2, theta=1, mu=1.0, nu=0.4, **{"lambda": 1},
                              gamma=1.2, delta=0.3, alpha=0.7, beta=1.1)),
        tol=TOL_1D, flags=TRUNCATED,
    ))
    mitt2_domain = (_gt("tau", 1), _con("0 < Re(mu) < 1", lambda p: 0 < _re(p, "mu") < 1),
                    _positive("s"), ALPHA, BETA,
                    _con("Re(m + mu) > 0", lambda p: (_c(p, "m") + _c(p, "mu")).real > 0),
                    _con("Re(gamma)/alpha < Re(tau)", lambda p: _growth_ok(p, "tau")))
    mitt2_params = ("m", "tau", "s", "mu", "nu", "gamma", "delta", "alpha", "beta")
    for ident, kind, anchor, comps in (
            ("GM-MITT2", "log1p", "log(1 + nu t^mu) weight: double series in Gamma((m+...)/tau)",
             ()),
            ("GM-LOGDIFF", "logdiff", "log(1 - nu^2 t^{2 mu}) weight: odd terms only",
             (Component(1.0, "GM-MITT2", lambda p: {}),
              Component(1.0, "GM-MITT2", lambda p: {"nu": -p["nu"]}))),
            ("GM-ARCTANH", "arctanh", "arctanh(nu t^mu) weight: even-index terms only", ())):
        lhs, rhs = _mitt2_family(kind)
        register(IdentitySpec(
            id=ident, anchor=anchor, dimension=1,
            params=mitt2_params, rhs_params=frozenset(mitt2_params),
            lhs=lhs, rhs=rhs, domain=mitt2_domain,
            default_samples=(dict(_MITT2_BASE),),
            tol=TOL_1D, flags=TRUNCATED, components=comps,
            note="printed constraints Re(tau) > 1, 0 < Re(mu) < 1 kept verbatim",
        ))
    register(IdentitySpec(
        id="GM-MITT3",
        anchor="e^{-s t^tau} t^{m-1} E(delta t^gamma): single series in Gamma((m + j gamma)/tau)",
        dimension=1,
        params=("m", "s", "tau", "gamma", "delta", "alpha", "beta"),
        rhs_params=frozenset({"m", "s", "tau", "gamma", "delta", "alpha", "beta"}),
        lhs=_mitt3_lhs, rhs=_mitt3_rhs,
        domain=(_gt("tau", 1), _positive("s"), _positive("m"), ALPHA, BETA,
                _con("Re(gamma)/alpha < Re(tau)", lambda p: _growth_ok(p, "tau"))),
        default_samples=(dict(m=0.5, s=1.5, tau=2, gamma=1.2, delta=0.3, alpha=0.7, beta=1.1),),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-LAPLACE",
        anchor="Laplace transform of t^{m-1} E(delta t^gamma)",
        dimension=1,
        params=("m", "s", "gamma", "delta", "alpha", "beta"),
        rhs_params=frozenset({"m", "s", "gamma", "delta", "alpha", "beta"}),
        lhs=lambda p: _laplace_lhs_of(p, "m", "delta", "gamma"),
        rhs=_laplace_rhs,
        domain=(_positive("s"), _positive("m"), ALPHA, BETA,
                _con("Re(gamma) < alpha", lambda p: _growth_ok(p, "1"))),
        default_samples=(dict(m=0.5, s=1.5, gamma=0.5, delta=0.3, alpha=0.7, beta=1.1),),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-LAPLACE-ERRATA",
        anchor="Laplace transform of t^{p-1} E(a t^gamma): corrected series against the "
               "misprinted s^{-alpha n} form",
        dimension=1,
        params=("p", "gamma", "alpha", "beta", "a", "s"),
        rhs_params=frozenset({"p", "gamma", "alpha", "beta", "a", "s"}),
        lhs=lambda p: _laplace_lhs_of(p, "p", "a", "gamma"),
        rhs=_errata_rhs, refuted=_errata_misprint,
        domain=(_positive("s"), _gt("gamma", 1), _positive("p"), ALPHA, BETA,
                _con("Re(gamma) < alpha (series and integral converge)",
                     lambda p: _growth_ok(p, "1"))),
        default_samples=(dict(p=1.2, gamma=1.2, alpha=1.5, beta=1, a=0.3, s=2),),
        tol=TOL_1D,
        note="printed constraints Re(s) > 0, Re(gamma) > 1 kept; convergence needs gamma < alpha",
    ))
    register(IdentitySpec(
        id="GM-LAPLACE-ML",
        anchor="Laplace transform of t^{beta-1} E_{alpha,beta}(a t^alpha): s^{alpha-beta}/(s^alpha - a)",
        dimension=1,
        params=("alpha", "beta", "a", "s"),
        rhs_params=frozenset({"alpha", "beta", "a", "s"}),
        lhs=lambda p: _laplace_lhs_of(p, "beta", "a", "alpha"),
        rhs=_laplace_ml_rhs,
        domain=(ALPHA, BETA,
                _positive("s"),
                _con("Re(s) > Re(a^{1/alpha}) when |arg a| < alpha pi/2", _laplace_ml_growth)),
        default_samples=(dict(alpha=0.5, beta=1, a=-1, s=1), dict(alpha=0.8, beta=1.5, a=0.3, s=2)),
        tol=TOL_1D,
    ))

    unit_params = ("m", "tau", "theta", "gamma", "delta", "alpha", "beta", "mu")
    unit_dom = THETA_WEIGHT + (ALPHA, BETA, _gt("m", -1))
    register(IdentitySpec(
        id="GM-LERCH",
        anchor="x^m log^k(1/x) / (1 + nu x^mu) over (0, 1): double sum of Lerch transcendents",
        dimension=1,
        params=("k",) + unit_params + ("nu",),
        rhs_params=frozenset(("k",) + unit_params + ("nu",)),
        lhs=_mitt_lerch_lhs, rhs=_mitt_lerch_rhs,
        domain=(_positive("tau"), _gt("mu", 1), ALPHA, BETA, _gt("m", -1), _gt("k", -1),
                NU_UNIT),
        default_samples=(dict(_UNIT_BASE, k=1.5, m=0.3, nu=0.6),),
        tol=TOL_1D,
    ))
    two = ("m", "s")
    register(IdentitySpec(
        id="GM-LERCH-GAMMA",
        anchor="(x^m - x^s) / ((1 + x^{2 mu}) log(1/x)): log-gamma quotients at quarter shifts",
        dimension=1,
        params=unit_params + ("s",),
        rhs_params=frozenset(unit_params + ("s",)),
        lhs=_gamma_diff_lhs, rhs=_gamma_diff_rhs,
        domain=unit_dom + (_gt("s", -1),),
        default_samples=(dict(_UNIT_BASE, m=0.3, s=0.8),),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-MALMSTEN",
        anchor="x^m log(log(1/x)) / (1 + x^mu): digamma and first Stieltjes constants",
        dimension=1,
        params=unit_params,
        rhs_params=frozenset(unit_params),
        lhs=_malmsten_lhs, rhs=_malmsten_rhs,
        domain=unit_dom,
        default_samples=(dict(_UNIT_BASE, m=0.3),),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-HURWITZ",
        anchor="x^m log^k(1/x) / (1 - x^mu): Hurwitz zeta at 1 + k",
        dimension=1,
        params=("k",) + unit_params,
        rhs_params=frozenset(("k",) + unit_params),
        lhs=_mitt_hurwitz_lhs, rhs=_mitt_hurwitz_rhs,
        domain=unit_dom + (_positive("k"),),
        default_samples=(dict(_UNIT_BASE, k=1.5, m=0.3),),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-DIGAMMA-DIFF",
        anchor="(x^m - x^s) / (x^mu - 1): digamma differences",
        dimension=1,
        params=unit_params + ("s",),
        rhs_params=frozenset(unit_params + ("s",)),
        lhs=lambda p: digamma_diff_lhs(p), rhs=_digamma_diff_rhs,
        domain=unit_dom + (_gt("s", -1),),
        default_samples=(dict(_UNIT_BASE, m=0.3, s=0.8),),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-ZETA-HALF",
        anchor="(x^m - x^s) log(log(1/x)) / ((x^mu - 1) sqrt(log(1/x))): zeta(1/2, .) "
               "and its s-derivative",
        dimension=1,
        params=unit_params + ("s",),
        rhs_params=frozenset(unit_params + ("s",)),
        lhs=_zeta_half_lhs, rhs=_zeta_half_rhs,
        domain=unit_dom + (_gt("s", -1),),
        default_samples=(dict(_UNIT_BASE, m=0.3, s=0.8),),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-MALMSTEN-ZETA2",
        anchor="(x^m - x^s) log(log(1/x)) / ((1 + x^mu) log(1/x)): second s-derivative "
               "of zeta at 0",
        dimension=1,
        params=unit_params + ("s",),
        rhs_params=frozenset(unit_params + ("s",)),
        lhs=_malmsten_zeta2_lhs, rhs=_malmsten_zeta2_rhs,
        domain=unit_dom + (_gt("s", -1),),
        default_samples=(dict(_UNIT_BASE, m=0.3, s=0.8),),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-LOG2-DENOM",
        anchor="x^m / (sqrt(1 + nu x^2) (log^2 a - log^2 x)): exponential integrals Gamma(0, .)",
        dimension=1,
        params=("m", "gamma", "delta", "alpha", "beta", "nu", "a"),
        rhs_params=frozenset({"m", "gamma", "delta", "alpha", "beta", "nu", "a"}),
        lhs=_log2denom_lhs, rhs=_log2denom_rhs,
        domain=(_positive("delta"), _gt("gamma", 1), ALPHA, BETA, _gt("m", -1),
                _con("|nu| < 1", lambda p: abs(_c(p, "nu")) < 1),
                _con("Im(a) != 0", lambda p: _c(p, "a").imag != 0)),
        default_samples=(dict(m=0.3, gamma=1.2, delta=0.5, alpha=0.7, beta=1.1, nu=0.5, a=2 + 1j),
                         dict(m=0.3, gamma=1.2, delta=0.5, alpha=0.7, beta=1.1, nu=0.5,
                              a=0.5 + 0.5j)),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-2F1",
        anchor="x^{m-1} (1 - nu x^mu)^lambda over [0, b]: Gauss hypergeometric series",
        dimension=1,
        params=("b", "lambda", "nu", "m", "mu", "gamma", "delta", "alpha", "beta"),
        rhs_params=frozenset({"b", "lambda", "nu", "m", "mu", "gamma", "delta", "alpha", "beta"}),
        lhs=_hyp_lhs, rhs=_hyp_rhs,
        domain=(_gt("gamma", 1), _positive("mu"), ALPHA, BETA, _positive("m"),
                _con("b real with 0 < b", lambda p: _c(p, "b").imag == 0 and _re(p, "b") > 0),
                _con("|nu b^mu| < 1",
                     lambda p: abs(_c(p, "nu") * _re(p, "b") ** _c(p, "mu")) < 1)),
        default_samples=(dict(b=0.8, **{"lambda": -0.5}, nu=0.6, m=0.7, mu=1.5, gamma=1.2,
                              delta=0.5, alpha=0.7, beta=1.1),),
        tol=TOL_1D,
    ))
    sum_params = ("m", "mu", "nu", "gamma", "delta", "alpha", "beta")
    sum_dom = (_gt("gamma", 1), _positive("mu"), ALPHA, BETA, _gt("m", -1), NU_UNIT)
    register(IdentitySpec(
        id="GM-LERCHSUM",
        anchor="x^m log^k(1/x) log^n(x) / (1 + nu x^mu): Lerch sum with csc(k pi)",
        dimension=1,
        params=("k", "n") + sum_params,
        rhs_params=frozenset(("k", "n") + sum_params),
        lhs=_lerchsum_lhs, rhs=_lerchsum_rhs,
        domain=sum_dom + (N_NATURAL, K_NONINT,
                          _con("Re(k) + n > -1", lambda p: _re(p, "k") + _re(p, "n") > -1)),
        default_samples=(dict(_SUM_BASE, k=0.3, n=2), dict(_SUM_BASE, k=0.3, n=0)),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-LERCHSUM-KDERIV",
        anchor="x^m log^n(x) log(log(1/x)) / ((1 + nu x^mu) sqrt(log(1/x))): Lerch "
               "transcendent and its s-derivative",
        dimension=1,
        params=("n",) + sum_params,
        rhs_params=frozenset(("n",) + sum_params),
        lhs=_kderiv_lhs, rhs=_kderiv_rhs,
        domain=sum_dom + (N_NATURAL,),
        default_samples=(dict(_SUM_BASE, n=0), dict(_SUM_BASE, n=2)),
        tol=TOL_1D,
    ))
    register(IdentitySpec(
        id="GM-LERCHSUM-DIFF",
        anchor="(x^s - x^m) log^k(1/x) / ((1 + nu x^mu) log x): difference of Lerch sums",
        dimension=1,
        params=("k", "s") + sum_params,
        rhs_params=frozenset(("k", "s") + sum_params),
        lhs=_lerchsum_diff_lhs, rhs=_lerchsum_diff_rhs,
        domain=sum_dom + (K_NONINT, _positive("k"), _gt("s", -1)),
        default_samples=(dict(_SUM_BASE, k=0.3, s=0.8),),
        tol=TOL_1D,
        components=(Component(1.0, "GM-LERCHSUM", lambda p: {"m": p["s"], "n": -1}),
                    Component(-1.0, "GM-LERCHSUM", lambda p: {"n": -1})),
    ))
