"""Command-line front end: eval, verify, sweep, table, plot-ml, list.

Exit codes: 0 when everything passes, 1 when a check fails, 2 for usage,
catalog, parameter-file and domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable, Sequence

import numpy as np

from . import __version__
from ._kernels import BACKEND
from .complexfn import digamma, gamma, hyp2f1, upper_incomplete_gamma
from .errors import ConvergenceError, DomainError, MLVError
from .mittag import MLParams, ml, mittag_leffler
from .quad import QuadConfig
from .zetafam import hurwitz_zeta, lerch_phi, polylog, stieltjes_gamma1

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad command line, unknown id or unreadable parameter file."""


# ---------------------------------------------------------------------------
# report

def _num(x: float) -> str:
    return f"{float(x):.17g}"


def _cnum(z: complex) -> str:
    from .registry.params import format_complex
    return format_complex(complex(z), 17)


def _parse_cnum(text: str) -> complex:
    # only the trailing unit is an i; "inf" keeps its own
    return complex(text[:-1] + "j" if text.endswith("i") else text)


@dataclass
class Report:
    schema_version: str
    timestamp: str
    config: dict
    results: list
    summary: dict
    timings: list = field(default_factory=list)
    sweep: dict | None = None


def summarize(results) -> dict:
    from .registry import DOMAIN, FAIL, PASS, QUADFAIL
    n = {s: sum(r.status == s for r in results) for s in (PASS, FAIL, DOMAIN, QUADFAIL)}
    return {"total": len(results), "pass": n[PASS], "fail": n[FAIL],
            "errors": n[DOMAIN] + n[QUADFAIL], "identities": len({r.id for r in results})}


def _result_to_json(r) -> dict:
    return {
        "id": r.id,
        "params": {k: _cnum(v) for k, v in r.params.items()},
        "lhs": _cnum(r.lhs), "rhs": _cnum(r.rhs),
        "abs_err": _num(r.abs_err), "rel_err": _num(r.rel_err),
        "lhs_err_estimate": _num(r.lhs_err_estimate),
        "status": r.status, "tol": _num(r.tol), "abs_floor": _num(r.abs_floor),
        "message": r.message,
        "extras": {k: _num(v) for k, v in r.extras.items()},
    }


def _result_from_json(d: dict):
    from .registry import VerificationResult
    return VerificationResult(
        id=d["id"],
        params={k: _parse_cnum(v) for k, v in d["params"].items()},
        lhs=_parse_cnum(d["lhs"]), rhs=_parse_cnum(d["rhs"]),
        abs_err=float(d["abs_err"]), rel_err=float(d["rel_err"]),
        lhs_err_estimate=float(d["lhs_err_estimate"]),
        status=d["status"], tol=float(d["tol"]), abs_floor=float(d["abs_floor"]),
        message=d["message"],
        extras={k: float(v) for k, v in d["extras"].items()},
    )


def report_to_json(rep: Report) -> str:
    out = {
        "schema_version": rep.schema_version,
        "timestamp": rep.timestamp,
        "config": rep.config,
        "results": [_result_to_json(r) for r in rep.results],
        "summary": rep.summary,
        "timings": [_num(t) for t in rep.timings],
    }
    if rep.sweep is not None:
        out["sweep"] = rep.sweep
    return json.dumps(out, indent=2, ensure_ascii=False) + "\n"


def report_from_json(text: str) -> Report:
    d = json.loads(text)
    if d.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {d.get('schema_version')!r}")
    results = [_result_from_json(r) for r in d["results"]]
    for r, t in zip(results, d.get("timings", [])):
        r.seconds = float(t)
    return Report(d["schema_version"], d["timestamp"], d["config"], results,
                  d["summary"], [float(t) for t in d.get("timings", [])], d.get("sweep"))


def _make_report(results, config: dict, sweep: dict | None = None) -> Report:
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return Report(SCHEMA_VERSION, stamp, config, list(results), summarize(results),
                  [r.seconds for r in results], sweep)


# ---------------------------------------------------------------------------
# shared helpers

def _quad_config(quad_tol: float | None) -> QuadConfig:
    # one number sets both the inner and the outer relative tolerance
    if quad_tol is None:
        return QuadConfig()
    return QuadConfig(rel_tol=quad_tol, outer_rel_tol=quad_tol)


def _config_echo(args, cfg: QuadConfig, **extra) -> dict:
    echo = {
        "version": __version__,
        "backend": BACKEND,
        "tol": None if getattr(args, "tol", None) is None else _num(args.tol),
        "quad": {"rel_tol": _num(cfg.rel_tol), "outer_rel_tol": _num(cfg.outer_rel_tol),
                 "abs_tol": _num(cfg.abs_tol), "max_level": cfg.level_cap()},
    }
    echo.update(extra)
    return echo


def _load_params_arg(path: str | None) -> dict | None:
    if path is None:
        return None
    from .registry import load_params
    try:
        return load_params(path)
    except OSError as exc:
        raise UsageError(f"cannot read parameter file: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"bad parameter file {path}: {exc}") from None


def _spec(ident: str):
    from .registry import get
    try:
        return get(ident)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _verify_job(job):
    from .registry import verify
    ident, params, tol, qtol = job
    return verify(ident, params, tol, _quad_config(qtol))


def _run_jobs(jobs: list, workers: int) -> list:
    # results come back in submission order whatever the completion order
    if workers <= 1 or len(jobs) <= 1:
        return [_verify_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_job, jobs))


def _exit_for(results) -> int:
    from .registry import DOMAIN, PASS
    if any(r.status == DOMAIN for r in results):
        return EXIT_USAGE
    return EXIT_OK if all(r.status == PASS for r in results) else EXIT_FAIL


def _split_values(text: str) -> list[complex]:
    from .registry import parse_complex
    try:
        return [parse_complex(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# eval

def _ml_eval(alpha, beta, z):
    if alpha.imag != 0:
        raise DomainError("Mittag-Leffler alpha must be real and positive")
    return ml(MLParams(alpha.real, beta), z)


FUNCTIONS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "ml": (("alpha", "beta", "z"), _ml_eval),
    "lerch_phi": (("z", "s", "v"), lerch_phi),
    "hurwitz_zeta": (("s", "a"), hurwitz_zeta),
    "polylog": (("s", "z"), polylog),
    "digamma": (("z",), digamma),
    "gamma": (("z",), gamma),
    "inc_gamma": (("s", "z"), upper_incomplete_gamma),
    "hyp2f1": (("a", "b", "c", "z"), hyp2f1),
    "stieltjes_gamma1": (("a",), stieltjes_gamma1),
}


def cmd_eval(args) -> int:
    from .registry import format_complex, parse_complex
    names, fn = FUNCTIONS[args.function]
    if len(args.args) != len(names):
        raise UsageError(f"{args.function} takes {len(names)} arguments "
                         f"({', '.join(names)}), got {len(args.args)}")
    try:
        vals = [parse_complex(a) for a in args.args]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        value = complex(np.asarray(fn(*vals)).reshape(()))
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"evaluation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(format_complex(value, 16))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    from .registry import catalog
    if args.all == bool(args.ids):
        raise UsageError("give identity ids or --all, not both")
    specs = catalog() if args.all else [_spec(i) for i in args.ids]
    params = _load_params_arg(args.params)
    cfg = _quad_config(args.quad_tol)
    jobs = []
    for s in specs:
        samples = [params] if params is not None else (s.default_samples or ({},))
        jobs += [(s.id, dict(p), args.tol, args.quad_tol) for p in samples]
    results = _run_jobs(jobs, args.jobs)
    rep = _make_report(results, _config_echo(args, cfg, ids=[s.id for s in specs],
                                             params_file=args.params))
    sys.stdout.write(report_to_json(rep))
    return _exit_for(results)


# ---------------------------------------------------------------------------
# sweep

def _parse_fixed(items: Sequence[str]) -> dict:
    from .registry import parse_params_text
    try:
        return parse_params_text("\n".join(items))
    except ValueError as exc:
        raise UsageError(f"bad --fixed value: {exc}") from None


def cmd_sweep(args) -> int:
    from .registry import DOMAIN, PASS, sweep_invariance
    from .registry.params import canonical_name
    spec = _spec(args.id)
    try:
        param = canonical_name(args.param)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    values = _split_values(args.values)
    if not values:
        raise UsageError("--values is empty")
    fixed = _load_params_arg(args.params) or {}
    fixed.update(_parse_fixed(args.fixed))
    cfg = _quad_config(args.quad_tol)
    tol = spec.tol if args.tol is None else args.tol
    try:
        rep = sweep_invariance(spec.id, param, values, fixed, cfg, args.tol)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    dev = rep.max_deviation
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([param, "lhs", "rhs", "rel_err", "status", "max_deviation"])
        for v, r in zip(values, rep.results):
            w.writerow([_cnum(v), _cnum(r.lhs), _cnum(r.rhs), _num(r.rel_err), r.status,
                        _num(dev)])
        sys.stdout.write(buf.getvalue())
    else:
        sweep = {"id": spec.id, "param": param, "values": [_cnum(v) for v in values],
                 "max_deviation": _num(dev), "tol": _num(tol)}
        report = _make_report(rep.results, _config_echo(args, cfg), sweep)
        sys.stdout.write(report_to_json(report))
    if any(r.status == DOMAIN for r in rep.results):
        return EXIT_USAGE
    ok = dev <= tol and all(r.status == PASS for r in rep.results)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# table

def cmd_table(args) -> int:
    from .registry import PASS, table_entries
    entries = table_entries()
    jobs = [(s.id, dict(s.default_samples[0]) if s.default_samples else {}, args.tol,
             args.quad_tol) for s in entries]
    results = _run_jobs(jobs, args.jobs)
    rows = [(s.table_row, s.id, s.table_label, r) for s, r in zip(entries, results)]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row", "id", "closed_form", "lhs", "rhs", "rel_err", "status"])
        for row, ident, label, r in rows:
            w.writerow([row, ident, label, _cnum(r.lhs), _cnum(r.rhs), _num(r.rel_err),
                        r.status])
        sys.stdout.write(buf.getvalue())
    else:
        head = f"{'row':>3}  {'id':<20} {'lhs':<44} {'rel err':>9}  status"
        print(head)
        print("-" * len(head))
        for row, ident, label, r in rows:
            lhs = f"{r.lhs.real:+.12g}{r.lhs.imag:+.12g}i"
            err = "-" if math.isnan(r.rel_err) else f"{r.rel_err:.2e}"
            mark = "" if r.status == PASS else "  <-- " + r.status
            print(f"{row:>3}  {ident:<20} {lhs:<44} {err:>9}  {r.status}{mark}")
            print(f"     {'':<20} = {label}")
    return EXIT_OK if all(r.status == PASS for _, _, _, r in rows) else EXIT_FAIL


# ---------------------------------------------------------------------------
# plot-ml

DEFAULT_PLOT_B = "0.25,0.5,0.75,1"
DEFAULT_PLOT_U = "0:10:101"


def _parse_u_range(text: str) -> np.ndarray:
    parts = text.split(":")
    try:
        if len(parts) == 2:
            lo, hi, n = float(parts[0]), float(parts[1]), 101
        elif len(parts) == 3:
            lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        else:
            raise ValueError
    except ValueError:
        raise UsageError(f"--u expects start:stop[:count], got {text!r}") from None
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo or n < 1:
        raise UsageError("--u range must be finite with start <= stop and count >= 1")
    return np.linspace(lo, hi, n)


def cmd_plot_ml(args) -> int:
    try:
        bs = [float(b) for b in args.b.split(",") if b.strip()]
    except ValueError:
        raise UsageError(f"--b expects comma-separated reals, got {args.b!r}") from None
    if not bs or any(not 0 < b <= 2 for b in bs):
        raise UsageError("--b values must lie in (0, 2]")
    u = _parse_u_range(args.u)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["b", "u", "value"])
    for b in bs:
        vals = np.asarray(mittag_leffler(b, 1.0, -u + 0j)).reshape(-1)
        for ui, vi in zip(u, vals):
            w.writerow([_num(b), _num(ui), _num(vi.real)])
    if args.out in (None, "-"):
        sys.stdout.write(buf.getvalue())
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    return EXIT_OK


# ---------------------------------------------------------------------------
# list

def cmd_list(args) -> int:
    from .registry import catalog
    specs = catalog()
    if args.format == "json":
        out = [{"id": s.id, "anchor": s.anchor, "dimension": s.dimension,
                "params": list(s.params), "tol": _num(s.tol), "flags": sorted(s.flags),
                "table_row": s.table_row, "samples": len(s.default_samples)}
               for s in specs]
        sys.stdout.write(json.dumps(out, indent=2, ensure_ascii=False) + "\n")
        return EXIT_OK
    for s in specs:
        flags = ",".join(sorted(s.flags)) or "-"
        print(f"{s.id:<22} {s.dimension}D  tol={s.tol:<7g} {flags:<20} "
              f"({', '.join(s.params)})  {s.anchor}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def _add_quad(p: argparse.ArgumentParser):
    p.add_argument("--tol", type=float, default=None,
                   help="relative tolerance overriding the per-entry default")
    p.add_argument("--quad-tol", type=float, default=None,
                   help="quadrature relative tolerance, inner and outer")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlv", description="Evaluate special functions and verify the identity catalog.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one special function")
    p.add_argument("function", choices=sorted(FUNCTIONS))
    p.add_argument("args", nargs="*", help="complex literals such as 0.5+0.25i")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="verify identities and emit a JSON report")
    p.add_argument("ids", nargs="*")
    p.add_argument("--all", action="store_true")
    p.add_argument("--params", help="file of 'name = value' lines")
    _add_quad(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="check that the LHS ignores a parameter")
    p.add_argument("id")
    p.add_argument("--param", required=True)
    p.add_argument("--values", required=True, help="comma-separated, e.g. --values=0.3,0.5")
    p.add_argument("--params", help="file of fixed 'name = value' lines")
    p.add_argument("--fixed", action="append", default=[], metavar="NAME=VALUE")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    _add_quad(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table", help="reproduce the summary table of double integrals")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    _add_quad(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("plot-ml", help="CSV samples of E_b(-u)")
    p.add_argument("--b", default=DEFAULT_PLOT_B, help="comma-separated b in (0, 2]")
    p.add_argument("--u", default=DEFAULT_PLOT_U, help="start:stop[:count]")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_plot_ml)

    p = sub.add_parser("list", help="list catalog entries")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_list)
    return parser


def _protect_literals(argv: list[str]) -> list[str]:
    # eval arguments like -1+2i would otherwise be read as options
    if len(argv) >= 2 and argv[0] == "eval" and not argv[1].startswith("-") \
            and "--" not in argv:
        return argv[:2] + ["--"] + argv[2:]
    return argv


def main(argv: Sequence[str] | None = None) -> int:
    argv = _protect_literals(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        if getattr(args, "quad_tol", None) is not None:
            _quad_config(args.quad_tol)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MLVError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
