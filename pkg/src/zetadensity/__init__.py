"""Explicit zero-density bounds for the Riemann zeta function.

Computes every constant of the bound N(sigma,T) <= b1 (T-H) + b2 log(TH) + b3
from first principles at controlled precision, verifies the supporting
inequalities on grids, regenerates the reference coefficient table, and
compares against the classical zero-counting bounds.
"""

from .precision import ComplexPoint, PrecisionContext, Rounding, DEFAULT_CONTEXT
from .errors import (
    DomainError,
    PoleError,
    SingularParameterError,
    UnsupportedHeightError,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexPoint",
    "PrecisionContext",
    "Rounding",
    "DEFAULT_CONTEXT",
    "DomainError",
    "PoleError",
    "SingularParameterError",
    "UnsupportedHeightError",
    "__version__",
]
