"""Identity records, verification and invariance sweeps."""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from ..errors import ConvergenceError, DomainError, MLVError, QuadratureError
from ..quad import (Axis, QuadConfig, QuadResult, SingularityHint, integrate_double,
                    integrate_finite, integrate_semiinf)
from .params import ParamAssignment, make_params

PASS = "pass"
FAIL = "fail"
DOMAIN = "domain-violation"
QUADFAIL = "quadrature-failure"
STATUSES = (PASS, FAIL, DOMAIN, QUADFAIL)

DEFAULT_ABS_FLOOR = 1e-12


@dataclass(frozen=True)
class Constraint:
    """A domain condition: readable text plus a predicate on the parameters."""

    text: str
    check: Callable[[ParamAssignment], bool]

    def holds(self, p: ParamAssignment) -> bool:
        try:
            return bool(self.check(p))
        except (KeyError, ZeroDivisionError, ValueError, TypeError):
            return False


@dataclass(frozen=True)
class Integrand:
    """A left-hand side ready for quadrature.

    ``kind`` is "finite", "semiinf" or "double".  For "double" the callable
    takes (x, u) with u the inner variable; otherwise it takes one array.
    """

    kind: str
    f: Callable
    lower: float = 0.0
    upper: float = math.inf
    hint: SingularityHint | None = None
    inner: Axis | None = None
    outer: Axis | None = None


@dataclass(frozen=True)
class Component:
    """One base-identity term of a fused difference or sum.

    ``overrides`` maps the fused entry's parameters to the changes applied
    to the base entry's parameters.
    """

    coef: float
    ident: str
    overrides: Callable[[ParamAssignment], Mapping[str, complex]]


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    anchor: str
    dimension: int
    params: tuple[str, ...]
    rhs_params: frozenset[str]
    lhs: Callable[[ParamAssignment], Integrand]
    rhs: Callable[[ParamAssignment], complex]
    domain: tuple[Constraint, ...]
    default_samples: tuple[ParamAssignment, ...]
    tol: float
    flags: frozenset[str] = frozenset()
    refuted: Callable[[ParamAssignment], complex] | None = None
    table_row: int | None = None
    table_label: str = ""
    components: tuple[Component, ...] = ()
    note: str = ""

    def violations(self, p: ParamAssignment) -> list[str]:
        missing = [n for n in self.params if n not in p]
        out = [f"missing parameter {n}" for n in missing]
        if missing:
            return out
        return [c.text for c in self.domain if not c.holds(p)]

    def complete(self, p: Mapping[str, complex] | None) -> ParamAssignment:
        """Fill names absent from ``p`` with the first default sample."""
        base = dict(self.default_samples[0]) if self.default_samples else {}
        if p:
            base.update(make_params(p))
        return make_params({k: v for k, v in base.items() if k in self.params})


@dataclass
class VerificationResult:
    id: str
    params: dict[str, complex]
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    lhs_err_estimate: float
    status: str
    tol: float
    abs_floor: float
    message: str = ""
    extras: dict[str, float] = field(default_factory=dict)
    seconds: float = 0.0


_CATALOG: dict[str, IdentitySpec] = {}


def register(spec: IdentitySpec) -> IdentitySpec:
    if spec.id in _CATALOG:
        raise ValueError(f"duplicate identity id {spec.id}")
    for s in spec.default_samples:
        bad = spec.violations(s)
        if bad:
            raise ValueError(f"{spec.id}: default sample {s} violates {bad}")
    _CATALOG[spec.id] = spec
    return spec


def catalog() -> list[IdentitySpec]:
    return list(_CATALOG.values())


def get(ident: str) -> IdentitySpec:
    try:
        return _CATALOG[ident]
    except KeyError:
        raise KeyError(f"unknown identity {ident!r}") from None


def list_identities() -> list[tuple[str, str, int, tuple[str, ...]]]:
    """(id, anchor, dimension, parameter names) in catalog order."""
    return [(s.id, s.anchor, s.dimension, s.params) for s in catalog()]


def rhs_value(ident: str, params: Mapping[str, complex]) -> complex:
    spec = get(ident)
    p = spec.complete(params)
    bad = spec.violations(p)
    if bad:
        raise DomainError(f"{ident}: " + "; ".join(bad))
    return complex(spec.rhs(p))


def _quad_config_for(spec: IdentitySpec, cfg: QuadConfig | None) -> QuadConfig:
    return cfg or QuadConfig()


def lhs_value(ident: str, params: Mapping[str, complex],
              cfg: QuadConfig | None = None, check_domain: bool = True) -> QuadResult:
    """Quadrature of the left-hand side."""
    spec = get(ident)
    p = spec.complete(params)
    if check_domain:
        bad = spec.violations(p)
        if bad:
            raise DomainError(f"{ident}: " + "; ".join(bad))
    cfg = _quad_config_for(spec, cfg)
    ig = spec.lhs(p)
    if ig.kind == "double":
        return integrate_double(ig.f, ig.inner, ig.outer, cfg)
    if ig.kind == "finite":
        return integrate_finite(ig.f, ig.lower, ig.upper, ig.hint, cfg)
    if ig.kind == "semiinf":
        return integrate_semiinf(ig.f, ig.lower, ig.hint, cfg)
    raise ValueError(f"unknown integrand kind {ig.kind}")


def _rel(a: complex, b: complex) -> float:
    d = abs(a - b)
    m = abs(b)
    return d / m if m > 0 else (0.0 if d == 0 else math.inf)


def verify(ident: str, params: Mapping[str, complex] | None = None,
           tol: float | None = None, cfg: QuadConfig | None = None,
           abs_floor: float = DEFAULT_ABS_FLOOR) -> VerificationResult:
    """Compare quadrature of the LHS with the closed-form RHS.

    Never raises for a known identity; failures are encoded in ``status``.
    When the entry carries a refuted (misprinted) form, passing also
    requires the LHS to differ from it by more than 1000 times the
    entry's default tolerance.
    """
    t0 = time.perf_counter()
    spec = get(ident)
    p = spec.complete(params)
    tol = spec.tol if tol is None else float(tol)
    nan = complex(math.nan, math.nan)

    def result(status, lhs=nan, rhs=nan, est=math.nan, msg="", extras=None):
        both = cmath.isfinite(lhs) and cmath.isfinite(rhs)
        ae = abs(lhs - rhs) if both else math.nan
        re = _rel(lhs, rhs) if both else math.nan
        return VerificationResult(ident, dict(p), complex(lhs), complex(rhs), ae, re,
                                  est, status, tol, abs_floor, msg, extras or {},
                                  time.perf_counter() - t0)

    bad = spec.violations(p)
    if bad:
        return result(DOMAIN, msg="; ".join(bad))
    try:
        rhs = complex(spec.rhs(p))
    except (ConvergenceError, DomainError) as exc:
        return result(FAIL, msg=f"right-hand side: {exc}")
    try:
        q = lhs_value(ident, p, cfg, check_domain=False)
    except (QuadratureError, ConvergenceError) as exc:
        return result(QUADFAIL, rhs=rhs, msg=str(exc))
    except MLVError as exc:
        return result(QUADFAIL, rhs=rhs, msg=f"integrand: {exc}")
    if not q.converged or not np.isfinite(q.value):
        return result(QUADFAIL, lhs=q.value, rhs=rhs, est=q.err_estimate,
                      msg=f"quadrature did not converge (level {q.level})")
    lhs = q.value
    ok = _rel(lhs, rhs) <= tol or abs(lhs - rhs) <= abs_floor
    extras: dict[str, float] = {}
    msg = ""
    if spec.refuted is not None:
        try:
            alt = complex(spec.refuted(p))
            dev = _rel(lhs, alt)
        except MLVError:
            dev = math.inf
        extras["refuted_rel_dev"] = dev
        # separation is judged at the entry's own tolerance, not an override
        if not dev > 1e3 * spec.tol:
            ok = False
            msg = "LHS does not separate from the refuted printed form"
    return result(PASS if ok else FAIL, lhs, rhs, q.err_estimate, msg, extras)


@dataclass
class SweepReport:
    id: str
    param: str
    values: list[complex]
    results: list[VerificationResult]
    max_deviation: float


def sweep_invariance(ident: str, sweep_param: str, values: Sequence[complex],
                     fixed: Mapping[str, complex] | None = None,
                     cfg: QuadConfig | None = None,
                     tol: float | None = None) -> SweepReport:
    """Evaluate the LHS across ``values`` of a parameter absent from the RHS.

    Reports the largest pairwise relative deviation between finite LHS
    values.  A failing point is recorded and the sweep continues.
    """
    spec = get(ident)
    if sweep_param in spec.rhs_params:
        raise DomainError(f"{sweep_param} appears in the right-hand side of {ident}")
    base = spec.complete(fixed)
    results = []
    for v in values:
        p = dict(base)
        if sweep_param in spec.params:
            p[sweep_param] = complex(v)
        results.append(verify(ident, p, tol, cfg))
    vals = [r.lhs for r in results if np.isfinite(r.lhs)]
    dev = 0.0
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            den = max(abs(vals[i]), abs(vals[j]))
            if den > 0:
                dev = max(dev, abs(vals[i] - vals[j]) / den)
    if len(vals) < len(results):
        dev = math.inf if len(vals) < 2 and len(results) > 1 else dev
    return SweepReport(ident, sweep_param, [complex(v) for v in values], results, dev)
