"""Parameter assignments and the flat ``name = value`` file format."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Mapping

ParamAssignment = dict[str, complex]

SYMBOLS = frozenset({
    "a", "b", "c", "m", "k", "n", "p", "s", "z", "v",
    "alpha", "beta", "gamma", "delta", "theta", "tau", "lambda", "mu", "nu",
})

GREEK = {
    "α": "alpha", "β": "beta", "γ": "gamma", "δ": "delta", "θ": "theta",
    "τ": "tau", "λ": "lambda", "μ": "mu", "µ": "mu", "ν": "nu",
}


def canonical_name(name: str) -> str:
    key = GREEK.get(name.strip(), name.strip())
    if key not in SYMBOLS:
        raise KeyError(f"unknown parameter name {name!r}")
    return key


def make_params(mapping: Mapping[str, complex]) -> ParamAssignment:
    return {canonical_name(k): complex(v) for k, v in mapping.items()}


def parse_complex(text: str) -> complex:
    """Parse ``re``, ``re+imi``, ``imi`` or ``i`` (``j`` also accepted)."""
    t = text.strip().replace(" ", "")
    if not t or re.search(r"[^0-9eE.+\-ij]", t):
        raise ValueError(f"cannot parse complex literal {text!r}")
    try:
        return complex(t.replace("i", "j"))
    except ValueError:
        raise ValueError(f"cannot parse complex literal {text!r}") from None


def format_complex(z: complex, digits: int = 16) -> str:
    sign = "-" if z.imag < 0 or (z.imag == 0 and str(z.imag).startswith("-")) else "+"
    return f"{z.real:.{digits}g}{sign}{abs(z.imag):.{digits}g}i"


def parse_params_text(text: str) -> ParamAssignment:
    out: ParamAssignment = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'name = value'")
        name, value = (t.strip() for t in line.split("=", 1))
        try:
            key = canonical_name(name)
        except KeyError as exc:
            raise ValueError(f"line {lineno}: {exc.args[0]}") from None
        if key in out:
            raise ValueError(f"line {lineno}: duplicate parameter {key}")
        try:
            out[key] = parse_complex(value.replace(" ", ""))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return out


def load_params(path: str | Path) -> ParamAssignment:
    return parse_params_text(Path(path).read_text(encoding="utf-8"))


def dump_params(p: Mapping[str, complex]) -> str:
    return "".join(f"{k} = {format_complex(complex(v))}\n" for k, v in p.items())
