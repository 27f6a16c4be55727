"""Compiled kernels against the numpy fallback.

Times each hot loop on inputs shaped like those met inside the double
integrals, checks that both backends agree, then times a few catalog
entries end to end with each backend swapped in.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import math
import time
from dataclasses import asdict, dataclass

import numpy as np

import mlverify._kernels as kernels
from mlverify import mittag
from mlverify.registry import verify

ENTRIES = ("DI-DEGEN", "DI-PI24", "DI-CATALAN", "GM-MAIN", "LERCH-INT")


@dataclass
class Row:
    name: str
    python_s: float
    cython_s: float
    speedup: float
    max_rel_diff: float


def _best(fn, repeat: int) -> float:
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _rel(a, b) -> float:
    a, b = np.asarray(a), np.asarray(b)
    den = np.maximum(np.abs(b), 1e-300)
    return float(np.max(np.abs(a - b) / den))


def kernel_cases(rng: np.random.Generator):
    z = (rng.uniform(-1, 1, 4096) + 1j * rng.uniform(-1, 1, 4096)) * 0.9
    logc = mittag._series_coeffs(0.6, 1.0 + 0j, 0.0)
    yield "ml_series", (lambda k: k.ml_series(z, logc)[0])

    rho, w = mittag._kernel_grid(0.6, 1.0 + 0j, 1.0 / 16)
    t = np.sort(rng.uniform(1.0, 40.0, 2048))
    yield "laplace_sum", (lambda k: k.laplace_sum(t, rho, w))

    v = rng.uniform(0.1, 3.0, 2048) + 0j
    yield "lerch_series", (lambda k: k.lerch_series(0.9 * np.exp(0.4j), 1.5, v, 1e-17,
                                                    1_000_000)[0])


def bench_kernels(repeat: int, seed: int) -> list[Row]:
    py, cy = kernels.backend_module("python"), kernels.backend_module("cython")
    rows = []
    for name, call in kernel_cases(np.random.default_rng(seed)):
        diff = _rel(call(py), call(cy))
        tp, tc = _best(lambda: call(py), repeat), _best(lambda: call(cy), repeat)
        rows.append(Row(name, tp, tc, tp / tc, diff))
    return rows


def _swap(mod) -> None:
    # mittag and zetafam look the kernels up through the package at call time
    for fn in ("ml_series", "laplace_sum", "lerch_series"):
        setattr(kernels, fn, getattr(mod, fn))


def bench_entries(repeat: int) -> list[Row]:
    py, cy = kernels.backend_module("python"), kernels.backend_module("cython")
    rows = []
    try:
        for ident in ENTRIES:
            out = {}
            for label, mod in (("python", py), ("cython", cy)):
                _swap(mod)
                mittag._series_coeffs.cache_clear()
                res = verify(ident)
                out[label] = (res.lhs, _best(lambda: verify(ident), repeat))
            diff = _rel(out["python"][0], out["cython"][0])
            rows.append(Row(ident, out["python"][1], out["cython"][1],
                            out["python"][1] / out["cython"][1], diff))
    finally:
        _swap(kernels.backend_module(kernels.BACKEND))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--json", default=None, help="also write rows to this file")
    args = ap.parse_args()
    rows = bench_kernels(args.repeat, args.seed) + bench_entries(max(1, args.repeat // 2))
    print(f"{'case':<14} {'python s':>10} {'cython s':>10} {'speedup':>8} {'max rel diff':>13}")
    for r in rows:
        print(f"{r.name:<14} {r.python_s:>10.4f} {r.cython_s:>10.4f} {r.speedup:>8.1f} "
              f"{r.max_rel_diff:>13.2e}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump([asdict(r) for r in rows], fh, indent=2)


if __name__ == "__main__":
    main()
