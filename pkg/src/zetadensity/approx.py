"""Effective Dirichlet-polynomial approximation of zeta in the strip.

For sigma >= 1/2, t >= t0 and c > 1/(2 pi),

    zeta(s) = sum_{1 <= n < ct} n^-s + R(s),    |R(s)| <= C(sigma, c) t^-sigma,

with the fully explicit constant

    C(sigma, c) = (c + 1/2 + (3 sqrt(1 + 1/t0^2) / 2pi)
                   * (zeta(2)/(2 pi c) + 1 + 1/(2 pi c - 1))) * c^-sigma.

Specializing to c = 1 and t0 = 14.1347 (the height of the first zero,
truncated to the four decimals the bound chain uses) gives the corollary
constant c0 = 2.1946 after rounding up to 4 decimals.  verify_approx and
verify_small_t re-check the two inequalities used downstream on explicit
grids by full evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import DomainError
from .precision import DEFAULT_CONTEXT, ComplexPoint, PrecisionContext, Rounding
from .report import VerificationReport
from .zeta import dirichlet_partial_sum, zeta_complex, zeta_real

T0_FIRST_ZERO = "14.1347"
SMALL_T_CONSTANT = 43


@dataclass(frozen=True)
class ApproxParams:
    """Parameters (sigma, c, t0) of the remainder constant C(sigma, c)."""

    sigma: float
    c: float
    t0: float

    def __post_init__(self):
        if self.sigma < 0.5:
            raise DomainError(f"sigma must be >= 1/2, got {self.sigma}")
        if float(self.c) * 2 * 3.141592653589793 <= 1:
            raise DomainError(f"c must exceed 1/(2 pi), got {self.c}")
        if self.t0 <= 0:
            raise DomainError(f"t0 must be positive, got {self.t0}")


def big_C(p: ApproxParams, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """The remainder constant C(sigma, c) at working precision."""
    with ctx.workdps():
        c = mp.mpf(p.c)
        t0 = mp.mpf(p.t0)
        if 2 * mp.pi * c <= 1:
            raise DomainError(f"c must exceed 1/(2 pi), got {p.c}")
        z2 = zeta_real(2, ctx)
        bracket = z2 / (2 * mp.pi * c) + 1 + 1 / (2 * mp.pi * c - 1)
        head = c + mp.mpf(1) / 2 + 3 * mp.sqrt(1 + 1 / t0 ** 2) / (2 * mp.pi) * bracket
        return head * mp.power(c, -mp.mpf(p.sigma))


def c0_corollary(ctx: PrecisionContext = DEFAULT_CONTEXT):
    """The corollary constant: C(1/2, 1, 14.1347) rounded up to 4 decimals."""
    raw = big_C(ApproxParams(sigma=0.5, c=1.0, t0=float(mp.mpf(T0_FIRST_ZERO))), ctx)
    return ctx.round_decimal(raw, places=4, rounding=Rounding.UP)


def verify_approx(sigma_grid, t_grid, ctx: PrecisionContext = DEFAULT_CONTEXT,
                  constant=None) -> VerificationReport:
    """Check |zeta(s) - sum_{n<t} n^-s| <= c0 t^-sigma over a grid.

    Requires every sigma >= 1/2 and every t >= 14.1347.  The left side is
    evaluated in full; the theorem guarantees the inequality, so the run
    itself is the check.
    """
    report = VerificationReport(label="dirichlet-approx")
    with ctx.workdps():
        c0 = mp.mpf(constant) if constant is not None else c0_corollary(ctx)
        t0_min = mp.mpf(T0_FIRST_ZERO)
        for sigma in sigma_grid:
            sig = mp.mpf(sigma)
            if sig < 0.5:
                raise DomainError(f"sigma must be >= 1/2, got {sigma}")
            for t in t_grid:
                tt = mp.mpf(t)
                if tt < t0_min:
                    raise DomainError(f"t must be >= {T0_FIRST_ZERO}, got {t}")
                s = ComplexPoint(float(sig), float(tt))
                lhs = abs(zeta_complex(s, ctx) - dirichlet_partial_sum(s, tt, ctx))
                rhs = c0 * mp.power(tt, -sig)
                report.observe(float(lhs / rhs), (float(sig), float(tt)))
    return report


def default_small_t_grid() -> tuple[list, list]:
    """sigma in [0.5, 2] step 0.05; t in [0.01, 15] step 0.01, as exact ratios."""
    sigmas = [Fraction(i, 20) for i in range(10, 41)]
    ts = [Fraction(j, 100) for j in range(1, 1501)]
    return sigmas, ts


def verify_small_t(ctx: PrecisionContext = DEFAULT_CONTEXT,
                   sigma_grid=None, t_grid=None,
                   constant=SMALL_T_CONSTANT) -> VerificationReport:
    """Check |zeta(s) - sum_{n<t} n^-s| <= 43 t^-sigma for small heights.

    Default sweep: sigma from 1/2 to 2 in steps of 1/20, t from 0.01 to 15
    in steps of 0.01.  The pole s = 1 cannot occur since t >= 0.01; the
    grid construction still skips it defensively.
    """
    defaults = default_small_t_grid()
    sigmas = defaults[0] if sigma_grid is None else sigma_grid
    ts = defaults[1] if t_grid is None else t_grid
    report = VerificationReport(label="small-t")
    with ctx.workdps():
        bound = mp.mpf(constant)
        for sigma in sigmas:
            sig = mp.mpf(sigma if not isinstance(sigma, Fraction)
                         else mp.mpf(sigma.numerator) / sigma.denominator)
            for t in ts:
                tt = mp.mpf(t if not isinstance(t, Fraction)
                            else mp.mpf(t.numerator) / t.denominator)
                if sig == 1 and tt == 0:
                    continue  # exact pole, excluded by construction
                s = ComplexPoint(float(sig), float(tt))
                lhs = abs(zeta_complex(s, ctx) - dirichlet_partial_sum(s, tt, ctx))
                rhs = bound * mp.power(tt, -sig)
                report.observe(float(lhs / rhs), (float(sig), float(tt)))
    return report
