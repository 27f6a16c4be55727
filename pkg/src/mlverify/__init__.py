"""Numerical verification of Mittag-Leffler / Hurwitz-Lerch integral identities."""

__version__ = "0.1.0"
