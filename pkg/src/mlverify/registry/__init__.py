"""Catalog of integral identities with verification drivers.

Entries are registered once at import, in a fixed order: the Mellin and
Lerch mechanisms, the double integrals, the single integrals of the
generalized Mittag-Leffler function, then the extra summary-table rows.
"""

from . import double, single
from .core import (DOMAIN, FAIL, PASS, QUADFAIL, STATUSES, Component, Constraint,
                   IdentitySpec, Integrand, SweepReport, VerificationResult, catalog, get,
                   lhs_value, list_identities, rhs_value, sweep_invariance, verify)
from .params import (ParamAssignment, SYMBOLS, format_complex, load_params, make_params,
                     parse_complex, parse_params_text)
from .single import triple_series

single.register_mechanism()
double.register_entries()
single.register_entries()
double.register_table_rows()


def table_entries() -> list[IdentitySpec]:
    """Entries carrying a summary-table row, in row order."""
    rows = [s for s in catalog() if s.table_row is not None]
    return sorted(rows, key=lambda s: s.table_row)


__all__ = [
    "Component", "Constraint", "DOMAIN", "FAIL", "IdentitySpec", "Integrand", "PASS",
    "ParamAssignment", "QUADFAIL", "STATUSES", "SYMBOLS", "SweepReport",
    "VerificationResult", "catalog", "format_complex", "get", "lhs_value",
    "list_identities", "load_params", "make_params", "parse_complex", "parse_params_text",
    "rhs_value", "sweep_invariance", "table_entries", "triple_series", "verify",
]
