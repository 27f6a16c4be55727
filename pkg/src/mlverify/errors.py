"""Exception and warning types shared across the package."""

from __future__ import annotations


class MLVError(Exception):
    """Base class for all package errors."""


class DomainError(MLVError, ValueError):
    """An argument lies outside the supported domain of an operation."""


class PoleError(DomainError):
    """Evaluation at a pole; ``location`` carries the offending point."""

    def __init__(self, message: str, location: complex | int | None = None):
        super().__init__(message)
        self.location = location


class SingularityError(DomainError):
    """A removable or essential singularity prevents evaluation."""


class RegionError(DomainError):
    """No supported evaluation region covers the arguments."""


class ConvergenceError(MLVError, ArithmeticError):
    """An iterative method failed to reach the requested tolerance."""


class TruncationError(ConvergenceError):
    """A truncated series did not settle below its tolerance before the cap."""


class QuadratureError(ConvergenceError):
    """Quadrature failed; ``abscissa`` records where, when known."""

    def __init__(self, message: str, abscissa: float | None = None,
                 outer_abscissa: float | None = None):
        super().__init__(message)
        self.abscissa = abscissa
        self.outer_abscissa = outer_abscissa


class AccuracyWarning(UserWarning):
    """Result computed but with a large estimated loss of significance."""


class BranchCutWarning(UserWarning):
    """A series was evaluated with its argument on a branch cut."""


class SlowDecayWarning(UserWarning):
    """A semi-infinite integrand decays too slowly for reliable quadrature."""
