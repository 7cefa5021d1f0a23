"""Log-integral and argument-integral constants on the edge of the strip.

Three explicit constants enter the zero-count bound:

  E2: a uniform lower bound  int_H^T log|zeta(sigma1 + it)| dt >= -E2,
      from the von Mangoldt series of log|zeta| truncated at N0 with a
      zeta'/zeta tail bound; evaluates to 1.7655 after rounding up.

  E3(sigma0) = pi (1 + 2 eta) (sigma1 - sigma0) / (4 log 2), the log(HT)
      coefficient of the argument-integral bound.

  E4(sigma0, H): the H-dependent remainder of the same bound, a single
      logarithm of a convexity-bound expression; decreasing in H.

verify_rademacher spot-checks the convexity bound

    |zeta(s)| <= 3 |1+s|/|1-s| * (|1+s| / 2pi)^((1 + eta - Re s)/2) * zeta(1+eta)

for -eta <= Re s <= 1 + eta, which is the only zeta estimate the argument
bound consumes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath as mp

from .errors import DomainError
from .precision import DEFAULT_CONTEXT, ComplexPoint, PrecisionContext
from .report import VerificationReport
from .zeta import (
    log_deriv_zeta_real,
    prime_power_bases,
    zeta_complex,
    zeta_real,
)

DEFAULT_ETA = "0.0001"  # kept as a decimal string: exact at any precision
DEFAULT_N0 = 1000


@dataclass(frozen=True)
class StripParams:
    """eta, sigma1 = 3/2 + 2 eta, and the truncation point N0."""

    eta: object = DEFAULT_ETA
    N0: int = DEFAULT_N0

    def __post_init__(self):
        if float(self.eta) <= 0:
            raise DomainError(f"eta must be positive, got {self.eta}")
        if self.N0 < 100:
            raise DomainError(f"N0 must be >= 100, got {self.N0}")

    def sigma1(self, ctx: PrecisionContext = DEFAULT_CONTEXT):
        """sigma1 = 3/2 + 2 eta, held exactly to the defining relation."""
        with ctx.workdps():
            return mp.mpf(3) / 2 + 2 * mp.mpf(self.eta)


DEFAULT_STRIP = StripParams()


def E2_constant(p: StripParams = DEFAULT_STRIP,
                ctx: PrecisionContext = DEFAULT_CONTEXT):
    """The log-integral constant, unrounded.

    2 * ( (-zeta'/zeta(sigma1)) / (log N0)^2
          + sum_{n <= N0} Lambda(n) n^-sigma1 (1/(log n)^2 - 1/(log N0)^2) )
    """
    with ctx.workdps():
        sigma1 = p.sigma1(ctx)
        lnN0sq = mp.log(p.N0) ** 2
        head = -log_deriv_zeta_real(sigma1, ctx) / lnN0sq
        acc = mp.mpf(0)
        for n, prime in prime_power_bases(p.N0):
            lam = mp.log(prime)
            acc += lam * mp.exp(-sigma1 * mp.log(n)) * (1 / mp.log(n) ** 2 - 1 / lnN0sq)
        return 2 * (head + acc)


def E3_constant(sigma0, p: StripParams = DEFAULT_STRIP,
                ctx: PrecisionContext = DEFAULT_CONTEXT):
    """pi (1 + 2 eta) (sigma1 - sigma0) / (4 log 2)."""
    with ctx.workdps():
        sigma0 = mp.mpf(sigma0)
        sigma1 = p.sigma1(ctx)
        if sigma0 >= sigma1:
            raise DomainError(f"sigma0 must be below sigma1 = {sigma1}, got {sigma0}")
        eta = mp.mpf(p.eta)
        return mp.pi * (1 + 2 * eta) * (sigma1 - sigma0) / (4 * mp.log(2))


def E4_constant(sigma0, H, p: StripParams = DEFAULT_STRIP,
                ctx: PrecisionContext = DEFAULT_CONTEXT):
    """The argument-integral remainder constant; requires H > 1 + 2 eta."""
    with ctx.workdps():
        sigma0 = mp.mpf(sigma0)
        H = mp.mpf(H)
        sigma1 = p.sigma1(ctx)
        eta = mp.mpf(p.eta)
        if sigma0 >= sigma1:
            raise DomainError(f"sigma0 must be below sigma1 = {sigma1}, got {sigma0}")
        if H <= 1 + 2 * eta:
            raise DomainError(f"H must exceed 1 + 2 eta = {1 + 2 * eta}, got {H}")
        inner = (3 * (H + 3 * (1 + eta)) / (H - (1 + 2 * eta))
                 * mp.power((3 * (1 + eta) / H + 1) / (2 * mp.pi), (1 + 2 * eta) / 2)
                 * zeta_real(1 + eta, ctx) ** 4 / zeta_real(2 * (1 + eta), ctx) ** 2)
        return mp.pi * (sigma1 - sigma0) / mp.log(2) * mp.log(inner)


def rademacher_rhs(s: ComplexPoint, eta, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Right side of the convexity bound at s."""
    with ctx.workdps():
        z = mp.mpc(mp.mpf(s.sigma), mp.mpf(s.t))
        eta = mp.mpf(eta)
        return (3 * abs(1 + z) / abs(1 - z)
                * mp.power(abs(1 + z) / (2 * mp.pi), (1 + eta - z.real) / 2)
                * zeta_real(1 + eta, ctx))


def verify_rademacher(eta=DEFAULT_ETA, sample=(),
                      ctx: PrecisionContext = DEFAULT_CONTEXT) -> VerificationReport:
    """Check the convexity bound at each sample point of the strip.

    Every point must satisfy -eta <= Re s <= 1 + eta and s != 1; an empty
    sample passes vacuously.
    """
    report = VerificationReport(label="rademacher")
    with ctx.workdps():
        eta_mp = mp.mpf(eta)
        for raw in sample:
            s = ComplexPoint.coerce(raw)
            sig = mp.mpf(s.sigma)
            if sig < -eta_mp or sig > 1 + eta_mp:
                raise DomainError(
                    f"Re s = {s.sigma} outside the strip [-eta, 1+eta]")
            if sig == 1 and s.t == 0:
                raise DomainError("s = 1 is excluded from the strip check")
            lhs = abs(zeta_complex(s, ctx))
            rhs = rademacher_rhs(s, eta_mp, ctx)
            report.observe(float(lhs / rhs), (s.sigma, s.t))
    return report


def default_rademacher_sample(count: int = 100, t_lo: float = 10.0,
                              t_hi: float = 1.0e4) -> list[ComplexPoint]:
    """count points: Re s cycling {0, 1/4, 1/2, 3/4, 1}, Im s log-spaced."""
    res = [0.0, 0.25, 0.5, 0.75, 1.0]
    per_row = count // len(res)
    pts = []
    with mp.workdps(30):
        lo, hi = mp.log(t_lo), mp.log(t_hi)
        for i, sigma in enumerate(res):
            for j in range(per_row):
                frac = mp.mpf(j) / max(per_row - 1, 1)
                pts.append(ComplexPoint(sigma, float(mp.exp(lo + (hi - lo) * frac))))
    return pts
