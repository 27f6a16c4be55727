"""Double integrals over the positive quadrant with the kernel E_b(-u)."""

from __future__ import annotations

import cmath
import math

import numpy as np

from ..complexfn import EULER_GAMMA, digamma, gamma
from ..mittag import MLParams, ml
from ..quad import AlgebraicDecay, Axis, ExpDecay, SingularityHint, cached_on_grid
from ..zetafam import hurwitz_zeta, hurwitz_zeta_sderiv, lerch_phi, polylog
from .core import Constraint, Integrand, IdentitySpec, register

PI = math.pi
TOL_2D = 1e-4

# ---------------------------------------------------------------------------
# integrand construction


def _inner_decay(m: complex, b: float):
    if b == 1.0:
        return ExpDecay(1.0)
    return AlgebraicDecay(complex(m).real - 2.0)


def _kernel_integrand(m: complex, b: float, c: complex, shift: complex, kernel,
                      ml_index: float | None = None) -> Integrand:
    """e^{-cx} u^{m-1} x^{-bm} E_{ml_index}(-u) K(shift + ln u - b ln x)."""
    m, c, shift = complex(m), complex(c), complex(shift)
    index = b if ml_index is None else ml_index
    e_neg = cached_on_grid(lambda u: ml(MLParams(index, 1.0), -u))

    def f(x, u):
        lu, lx = np.log(u), np.log(x)
        w = np.exp(-c * x + (m - 1.0) * lu - b * m * lx)
        return w * e_neg(u.ravel())[None, :] * kernel(shift + lu - b * lx)

    inner = Axis(0.0, math.inf, SingularityHint(m.real - 1.0, _inner_decay(m, index)))
    outer = Axis(0.0, math.inf, SingularityHint(-(b * m).real, ExpDecay(c.real)))
    return Integrand("double", f, inner=inner, outer=outer)


def _log_power(k: complex):
    k = complex(k)
    if k == 0:
        return lambda L: np.ones_like(L)
    if k.imag == 0 and k.real == round(k.real):
        n = int(k.real)
        return lambda L: L ** n
    return lambda L: np.exp(k * np.log(L))


def _loglog_over_power(p: int):
    return lambda L: np.log(L) / L ** p


def fused_log_difference(n: complex, m: complex, b: float, a: complex = 1.0) -> Integrand:
    """e^{-x} E_b(-u) u^{-1} (e^{nL'} - e^{mL'}) / L with L' = ln u - b ln x.

    L = L' + log a.  For a = 1 the ratio is removable at L = 0 and the
    Taylor form n - m + (n^2 - m^2) L / 2 is used when |L| < 1e-4.
    """
    n, m, a = complex(n), complex(m), complex(a)
    shift = cmath.log(a)
    e_neg = cached_on_grid(lambda u: ml(MLParams(b, 1.0), -u))

    def f(x, u):
        lu, lx = np.log(u), np.log(x)
        lp = lu - b * lx
        L = shift + lp
        num = np.exp(n * lp) - np.exp(m * lp)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = num / L
        if shift == 0:
            small = np.abs(L) < 1e-4
            if np.any(small):
                ratio = np.where(small, n - m + 0.5 * (n * n - m * m) * L, ratio)
        return np.exp(-x - lu) * e_neg(u.ravel())[None, :] * ratio

    lo = min(m.real, n.real)
    hi = max(m.real, n.real)
    inner = Axis(0.0, math.inf, SingularityHint(lo - 1.0, _inner_decay(hi, b)))
    outer = Axis(0.0, math.inf, SingularityHint(-b * hi, ExpDecay(1.0)))
    return Integrand("double", f, inner=inner, outer=outer)


# ---------------------------------------------------------------------------
# shared constraints


def _re(p, name):
    return complex(p[name]).real


def _real(p, name):
    return complex(p[name]).imag == 0


B_INDEX = Constraint("b real with 0 < b < 2", lambda p: _real(p, "b") and 0 < _re(p, "b") < 2)
C_POS = Constraint("Re(c) > 0", lambda p: _re(p, "c") > 0)
M_POS = Constraint("Re(m) > 0", lambda p: _re(p, "m") > 0)
M_HALF = Constraint("Re(m) <= 1/2", lambda p: _re(p, "m") <= 0.5)
BM_LT1 = Constraint("Re(b m) < 1", lambda p: (p["b"] * p["m"]).real < 1)
A_NONZERO = Constraint("a != 0", lambda p: p["a"] != 0)


def _k_supported(p) -> bool:
    k = complex(p["k"])
    return (k.imag == 0 and k.real == round(k.real)) or k.real < 0


K_UNIT_CIRCLE = Constraint("k is an integer or Re(k) < 0", _k_supported)


def _no_zero_crossing(p) -> bool:
    a = complex(p["a"])
    return not (a.imag == 0 and a.real > 0 and complex(p["k"]).real <= -1)


A_CROSSING = Constraint("a is not a positive real when Re(k) <= -1", _no_zero_crossing)


def _b(v=0.5):
    return {"b": complex(v)}


def _vshift(a: complex, b: complex, c: complex) -> complex:
    return -1j * (cmath.log(a) + b * cmath.log(c) + 1j * PI) / (2 * PI)


def _dilf_rhs(p):
    m, b, c, a, k = (p[n] for n in ("m", "b", "c", "a", "k"))
    cpow = cmath.exp((b * m - 1) * cmath.log(c))
    pref = cmath.exp((k + 1) * cmath.log(2j * PI))
    return pref * cmath.exp(1j * PI * m) * (-cpow) * lerch_phi(cmath.exp(2j * m * PI), -k,
                                                               _vshift(a, b, c))


def _dilf_lhs(p):
    return _kernel_integrand(p["m"], p["b"].real, p["c"], cmath.log(p["a"]),
                             _log_power(p["k"]))


def _fixed_lhs(m, a, c, kernel):
    return lambda p: _kernel_integrand(m, p["b"].real, c, cmath.log(a), kernel)


def _catalan() -> float:
    return polylog(2, 1j).imag


# ---------------------------------------------------------------------------
# log-gamma forms


def _lg_rhs(p):
    a, b, c = p["a"], p["b"], p["c"]
    base = cmath.log(a) + b * cmath.log(c)

    def T(j):
        return -1j * (base + j * 1j * PI) / (8 * PI)

    g = gamma
    val = ((-2 + 2j) * cmath.log(g(T(1)) / g(T(5)))
           - (2 + 2j) * cmath.log(g(T(3)) / g(T(7)))
           + 1j * PI + 2 * math.log(PI) + math.log(64))
    return PI * cmath.exp((b / 4 - 1) * cmath.log(c)) / math.sqrt(2) * val


def _lg1_lhs(angle: complex, b: complex) -> Integrand:
    angle = complex(angle)
    return _kernel_integrand(0.25, (b - 1).real, cmath.exp(1j * angle), 0.0,
                             lambda L: np.log(L + 1j * angle))


def _lg1_rhs(p):
    a, b = p["a"], p["b"]
    g = gamma
    r = a * b / PI
    val = ((-2 - 2j) * cmath.log(g((r + 3) / 8) / g((r + 7) / 8))
           - (2 - 2j) * cmath.log(g((a * b + PI) / (8 * PI)) / g((r + 5) / 8))
           + 1j * PI + 2 * math.log(PI) + math.log(64))
    return PI * cmath.exp(0.25j * a * (b - 5)) / math.sqrt(2) * val


def _lg1_instance(turns: float, g1: float, g2: float, g3: float, g4: float):
    def rhs(p):
        g = gamma
        val = (PI - 1j * math.log(64) - 2j * math.log(PI)
               + (2 + 2j) * cmath.log(g(g1) / g(g2))
               - (2 - 2j) * cmath.log(g(g3) / g(g4)))
        return cmath.exp(1j * PI * turns) * PI / math.sqrt(2) * val
    return rhs


def _lg2_rhs(p):
    a, b, c = p["a"], p["b"], p["c"]
    base = cmath.log(a) + b * cmath.log(c)

    def T(j):
        return -1j * (base + j * 1j * PI) / (4 * PI)

    ratio = 16 * PI ** 2 * gamma(T(3)) ** 4 / gamma(T(1)) ** 4
    return 0.5 * PI * cmath.exp((b / 2 - 1) * cmath.log(c)) * (cmath.log(ratio) + 1j * PI)


def _lg2_instance_a(p):
    t = 1j * math.log(4 / PI) / (3 * PI)
    ratio = 16 * PI ** 2 * gamma(1 + t) ** 4 / gamma(0.5 + t) ** 4
    return PI ** (2 / 3) / 2 ** (1 / 3) * (1j * PI + cmath.log(ratio))


def _lg2_instance_b(p):
    t = 5j * math.log(5 / PI) / (16 * PI)
    ratio = 16 * PI ** 2 * gamma(7 / 8 + t) ** 4 / gamma(3 / 8 + t) ** 4
    return 0.5 * 5 ** (3 / 8) * PI ** (5 / 8) * (1j * PI + cmath.log(ratio))


def _lg2_instance_c(p):
    c = PI / 7 + 1j
    t = 1j * (5 * cmath.log(1 + 1j) + 6 * cmath.log(c)) / (20 * PI)
    ratio = 16 * PI ** 2 * gamma(0.75 - t) ** 4 / gamma(0.25 - t) ** 4
    return PI / (2 * cmath.exp(0.4 * cmath.log(c))) * (1j * PI + cmath.log(ratio))


# ---------------------------------------------------------------------------
# catalog entries


def register_entries():
    register(IdentitySpec(
        id="DI-MAIN",
        anchor="double integral with log^k(a u x^-b) kernel equals a Lerch transcendent "
               "at e^{2 i m pi}",
        dimension=2,
        params=("m", "b", "c", "a", "k"),
        rhs_params=frozenset({"m", "b", "c", "a", "k"}),
        lhs=_dilf_lhs, rhs=_dilf_rhs,
        domain=(M_HALF, M_POS, B_INDEX, C_POS, BM_LT1, A_NONZERO, K_UNIT_CIRCLE, A_CROSSING),
        default_samples=(
            {"m": 0.5, "b": 0.25, "c": 1, "a": 1j, "k": 1},
            {"m": 0.5, "b": 0.5, "c": 2, "a": -1, "k": -2},
            {"m": 0.5, "b": 0.5, "c": 1, "a": 2, "k": 1},
            {"m": 0.4 + 0.1j, "b": 0.5, "c": 1, "a": -1, "k": 1},
        ),
        tol=TOL_2D,
        note="0 < Re(m) is needed for the inner integral to converge at u = 0.",
    ))
    register(IdentitySpec(
        id="DI-DEGEN",
        anchor="degenerate double integral (k = 0): pi csc(pi m) c^{bm-1}",
        dimension=2,
        params=("m", "b", "c"),
        rhs_params=frozenset({"m", "b", "c"}),
        lhs=lambda p: _kernel_integrand(p["m"], p["b"].real, p["c"], 0.0, _log_power(0)),
        rhs=lambda p: PI / cmath.sin(PI * p["m"]) * cmath.exp((p["b"] * p["m"] - 1)
                                                              * cmath.log(p["c"])),
        domain=(M_HALF, M_POS, B_INDEX, C_POS, BM_LT1),
        default_samples=({"m": 0.5, "b": 0.5, "c": 1}, {"m": 0.3, "b": 0.75, "c": 2}),
        tol=TOL_2D,
    ))
    register(IdentitySpec(
        id="DI-HURWITZ",
        anchor="log^k(i u x^{-1/4}) kernel, m = 1/2: difference of Hurwitz zeta values "
               "at 3/8 and 7/8",
        dimension=2,
        params=("k", "b"),
        rhs_params=frozenset({"k"}),
        lhs=lambda p: _kernel_integrand(0.5, p["b"].real, 1.0, 0.5j * PI, _log_power(p["k"])),
        rhs=lambda p: (cmath.exp(p["k"] * 0.5j * PI) * 2 ** (2 * p["k"] + 1)
                       * PI ** (p["k"] + 1)
                       * (hurwitz_zeta(-p["k"], 3 / 8) - hurwitz_zeta(-p["k"], 7 / 8))),
        domain=(B_INDEX, Constraint("Re(k) > -1", lambda p: _re(p, "k") > -1)),
        default_samples=({"k": 1, "b": 0.25}, {"k": 2, "b": 0.25}),
        tol=1e-3,
        note="slowly converging complex integrand; looser tolerance",
    ))
    register(IdentitySpec(
        id="DI-DIGAMMA",
        anchor="1/log(i u x^{-1/4}) kernel, m = 1/2: digamma difference at 3/8 and 7/8",
        dimension=2,
        params=("b",),
        rhs_params=frozenset(),
        lhs=_fixed_lhs(0.5, 1j, 1.0, lambda L: 1.0 / L),
        rhs=lambda p: 0.5j * (digamma(3 / 8) - digamma(7 / 8)),
        domain=(B_INDEX,),
        default_samples=(_b(0.25),),
        tol=TOL_2D, table_row=1, table_label="(i/2)(psi(3/8) - psi(7/8))",
    ))
    register(IdentitySpec(
        id="DI-LOGDIFF",
        anchor="removable log quotient (u^n x^{bm} - u^m x^{bn}) / (u log(u x^-b)): "
               "log(cot(pi m/2) tan(pi n/2))",
        dimension=2,
        params=("m", "n", "b"),
        rhs_params=frozenset({"m", "n"}),
        lhs=lambda p: fused_log_difference(p["n"], p["m"], p["b"].real),
        rhs=lambda p: cmath.log(1 / cmath.tan(PI * p["m"] / 2) * cmath.tan(PI * p["n"] / 2)),
        domain=(B_INDEX,
                Constraint("0 < Re(m) < 1", lambda p: 0 < _re(p, "m") < 1),
                Constraint("0 < Re(n) < 1", lambda p: 0 < _re(p, "n") < 1),
                Constraint("b max(Re m, Re n) < 1",
                           lambda p: _re(p, "b") * max(_re(p, "m"), _re(p, "n")) < 1)),
        default_samples=({"m": 0.3, "n": 0.6, "b": 0.5}, {"m": 0.25, "n": 0.5, "b": 0.8}),
        tol=TOL_2D, table_row=2, table_label="log(cot(pi m/2) tan(pi n/2))",
    ))
    register(IdentitySpec(
        id="DI-PHI-INV",
        anchor="c = 1 reduction: Lerch form independent of the index b",
        dimension=2,
        params=("m", "b", "a", "k"),
        rhs_params=frozenset({"m", "a", "k"}),
        lhs=lambda p: _kernel_integrand(p["m"], p["b"].real, 1.0, cmath.log(p["a"]),
                                        _log_power(p["k"])),
        rhs=lambda p: (cmath.exp((p["k"] + 1) * cmath.log(2j * PI))
                       * (-cmath.exp(1j * PI * p["m"]))
                       * lerch_phi(cmath.exp(2j * p["m"] * PI), -p["k"],
                                   _vshift(p["a"], 0, 1))),
        domain=(M_HALF, M_POS, B_INDEX, BM_LT1, A_NONZERO, K_UNIT_CIRCLE, A_CROSSING),
        default_samples=({"m": 1 / 3, "b": 0.6, "a": 1j, "k": 1},),
        tol=TOL_2D, table_row=3,
        table_label="(2 i pi)^{k+1} (-e^{i pi m}) Phi(e^{2 i m pi}, -k, -i(log a + i pi)/(2 pi))",
    ))
    register(IdentitySpec(
        id="DI-POLY",
        anchor="a = -1, c = 1 reduction: polylogarithm at e^{2 i m pi}",
        dimension=2,
        params=("m", "b", "k"),
        rhs_params=frozenset({"m", "k"}),
        lhs=lambda p: _kernel_integrand(p["m"], p["b"].real, 1.0, 1j * PI, _log_power(p["k"])),
        rhs=lambda p: (cmath.exp((p["k"] + 1) * cmath.log(2j * PI))
                       * (-cmath.exp(-1j * PI * p["m"]))
                       * polylog(-p["k"], cmath.exp(2j * p["m"] * PI))),
        domain=(M_HALF, M_POS, B_INDEX, BM_LT1, K_UNIT_CIRCLE),
        default_samples=({"m": 1 / 3, "b": 0.5, "k": 1}, {"m": 0.25, "b": 0.6, "k": -2}),
        tol=TOL_2D, table_row=4,
        table_label="(2 i pi)^{k+1} (-e^{-i pi m}) Li_{-k}(e^{2 i m pi})",
    ))
    register(IdentitySpec(
        id="DI-PI24",
        anchor="1/log^2(-u x^-b) kernel, m = 1/2: the constant -pi/24",
        dimension=2,
        params=("b",),
        rhs_params=frozenset(),
        lhs=_fixed_lhs(0.5, -1, 1.0, lambda L: L ** -2),
        rhs=lambda p: -PI / 24,
        domain=(B_INDEX,),
        default_samples=(_b(0.6), _b(0.3)),
        tol=TOL_2D, table_row=5, table_label="-pi/24",
    ))
    register(IdentitySpec(
        id="DI-CATALAN",
        anchor="1/log^2(-u x^-b) kernel, m = 1/4: Catalan's constant",
        dimension=2,
        params=("b",),
        rhs_params=frozenset(),
        lhs=_fixed_lhs(0.25, -1, 1.0, lambda L: L ** -2),
        rhs=lambda p: -cmath.exp(0.25j * PI) * (PI ** 2 - 48j * _catalan()) / (96 * PI),
        domain=(B_INDEX,),
        default_samples=(_b(0.5),),
        tol=TOL_2D, table_row=6, table_label="-(-1)^{1/4} (pi^2 - 48 i K) / (96 pi)",
    ))
    register(IdentitySpec(
        id="DI-LG",
        anchor="log(log(a u x^-b)) kernel, m = 1/4: log-gamma quotients with eighth shifts",
        dimension=2,
        params=("a", "b", "c"),
        rhs_params=frozenset({"a", "b", "c"}),
        lhs=lambda p: _kernel_integrand(0.25, p["b"].real, p["c"], cmath.log(p["a"]), np.log),
        rhs=_lg_rhs,
        domain=(B_INDEX, C_POS, Constraint("a is not a nonnegative real",
                                           lambda p: not (p["a"].imag == 0 and p["a"].real >= 0))),
        default_samples=({"a": 1j, "b": 0.25, "c": 1}, {"a": -1, "b": 0.5, "c": 1.5}),
        tol=TOL_2D,
    ))
    lg1_domain = (
        Constraint("a real with 0 < a < pi/2", lambda p: _real(p, "a") and 0 < _re(p, "a") < PI / 2),
        Constraint("b real with 1 < b < 3", lambda p: _real(p, "b") and 1 < _re(p, "b") < 3),
    )
    register(IdentitySpec(
        id="DI-LG1",
        anchor="rotated exponential e^{-e^{ia} x} with log(log(u x^{1-b}) + i a) kernel",
        dimension=2,
        params=("a", "b"),
        rhs_params=frozenset({"a", "b"}),
        lhs=lambda p: _lg1_lhs(p["a"], p["b"]),
        rhs=_lg1_rhs,
        domain=lg1_domain,
        default_samples=({"a": 0.3, "b": 1.5},),
        tol=TOL_2D,
    ))
    for ident, angle, b, inst in (
            ("DI-LG1-PI5", PI / 5, 4 / 3, (19 / 60, 19 / 120, 79 / 120, 49 / 120, 109 / 120)),
            ("DI-LG1-PI3", PI / 3, 4 / 3, (7 / 36, 13 / 72, 49 / 72, 31 / 72, 67 / 72)),
            ("DI-LG1-PI4", PI / 4, 5 / 4, (17 / 64, 21 / 128, 85 / 128, 53 / 128, 117 / 128)),
            ("DI-LG1-3PI7", 3 * PI / 7, 6 / 5, (13 / 140, 53 / 280, 193 / 280, 123 / 280, 263 / 280))):
        register(IdentitySpec(
            id=ident,
            anchor=f"rotated-exponential instance a = {angle / PI:.6g} pi, b = {b:.6g} "
                   f"with root-of-unity prefactor (-1)^{inst[0]:.6g}",
            dimension=2,
            params=(),
            rhs_params=frozenset(),
            lhs=lambda p, angle=angle, b=b: _lg1_lhs(angle, b),
            rhs=_lg1_instance(*inst),
            domain=(),
            default_samples=({},),
            tol=TOL_2D,
        ))
    register(IdentitySpec(
        id="DI-LG2",
        anchor="log(log(a u x^-b)) kernel, m = 1/2: log of 16 pi^2 Gamma^4 quotient",
        dimension=2,
        params=("a", "b", "c"),
        rhs_params=frozenset({"a", "b", "c"}),
        lhs=lambda p: _kernel_integrand(0.5, p["b"].real, p["c"], cmath.log(p["a"]), np.log),
        rhs=_lg2_rhs,
        domain=(B_INDEX, C_POS, Constraint("a is not a nonnegative real",
                           lambda p: not (p["a"].imag == 0 and p["a"].real >= 0))),
        default_samples=({"a": 1j, "b": 0.25, "c": 1}, {"a": -1, "b": 0.5, "c": 1.5}),
        tol=TOL_2D, table_row=7,
        table_label="(pi/2) c^{b/2-1} (log(16 pi^2 Gamma(T3)^4 / Gamma(T1)^4) + i pi)",
    ))
    for ident, a, b, c, rhs, row, label in (
            ("DI-LG2-A", -1, 4 / 3, PI / 4, _lg2_instance_a, 8,
             "pi^{2/3} 2^{-1/3} (i pi + log(16 pi^2 Gamma(1 + t)^4 / Gamma(1/2 + t)^4))"),
            ("DI-LG2-B", 1j, 5 / 4, PI / 5, _lg2_instance_b, None, ""),
            ("DI-LG2-C", 1 + 1j, 6 / 5, PI / 7 + 1j, _lg2_instance_c, None, "")):
        register(IdentitySpec(
            id=ident,
            anchor=f"m = 1/2 log-log instance a = {a}, b = {b:.6g}, c = {c:.6g}",
            dimension=2,
            params=(),
            rhs_params=frozenset(),
            lhs=lambda p, a=a, b=b, c=c: _kernel_integrand(0.5, b, c, cmath.log(a), np.log),
            rhs=rhs,
            domain=(),
            default_samples=({},),
            tol=TOL_2D, table_row=row, table_label=label,
        ))



def register_table_rows():
    def zeta_negk_printed(p):
        k = p["k"]
        return ((1 - 2 ** (k + 1)) * cmath.exp((k + 1) * cmath.log(2j * PI))
                * hurwitz_zeta(-k, 1.0))

    register(IdentitySpec(
        id="TBL-ZETA-NEGK",
        anchor="log^k(-u x^-b) kernel, m = 1/2: Riemann zeta at -k "
               "(corrected by a factor -i relative to the printed row)",
        dimension=2,
        params=("k", "b"),
        rhs_params=frozenset({"k"}),
        lhs=lambda p: _kernel_integrand(0.5, p["b"].real, 1.0, 1j * PI, _log_power(p["k"])),
        rhs=lambda p: -1j * zeta_negk_printed(p),
        domain=(B_INDEX, K_UNIT_CIRCLE, Constraint("k != -1", lambda p: p["k"] != -1)),
        default_samples=({"k": 1, "b": 0.5}, {"k": -2, "b": 0.5}),
        tol=TOL_2D, refuted=zeta_negk_printed, table_row=9,
        table_label="(1 - 2^{k+1}) (2 i pi)^{k+1} zeta(-k), times -i",
    ))
    loglog = (
        ("TBL-LOGLOG-4", 0, lambda p: PI * (math.log(4) + 0.5j * PI), 10, "pi (log 4 + i pi/2)"),
        ("TBL-LOGLOG-GAMMA", 1,
         lambda p: 0.5 * math.log(2) * (2j * EULER_GAMMA + PI - 1j * math.log(8 * PI ** 2)),
         11, "(log 2 / 2) (2 i gamma + pi - i log(8 pi^2))"),
        ("TBL-LOGLOG-GLAISHER", 2,
         lambda p: PI / 24 * (-12 * _log_glaisher() + EULER_GAMMA - 0.5j * PI + math.log(2)),
         12, "(pi/24) (-12 log A + gamma - i pi/2 + log 2)"),
    )
    for ident, power, rhs, row, label in loglog:
        register(IdentitySpec(
            id=ident,
            anchor=f"log(log(-u x^-b)) / log^{power}(-u x^-b) kernel, m = 1/2",
            dimension=2,
            params=("b",),
            rhs_params=frozenset(),
            lhs=lambda p, power=power: _kernel_integrand(0.5, p["b"].real, 1.0, 1j * PI,
                                                         _loglog_over_power(power)),
            rhs=rhs,
            domain=(B_INDEX,),
            default_samples=(_b(0.5),),
            tol=TOL_2D, table_row=row, table_label=label,
        ))


def _log_glaisher() -> float:
    return 1 / 12 - hurwitz_zeta_sderiv(-1, 1.0).real
