"""Exception taxonomy shared by all modules.

Everything derives from ValueError so callers that only care about
"bad input" can catch one type; the CLI maps any DomainError to exit
code 2.
"""


class DomainError(ValueError):
    """A parameter lies outside the legal box of the operation."""


class PoleError(DomainError):
    """Evaluation requested at the pole s = 1."""


class UnsupportedHeightError(DomainError):
    """Imaginary part beyond the desk-scale ceiling of the evaluator."""


class SingularParameterError(DomainError):
    """A parameter combination that makes a denominator vanish (e.g. H = H_rh)."""
