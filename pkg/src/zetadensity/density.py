"""Zero-density coefficients and comparisons with classical bounds.

Assembles the three explicit constants into the coefficients of

    N(sigma,T) <= b1 (T-H) + b2 log(TH) + b3        (T >= H_rh)

via

    b1 = log(zeta(2 sigma0) + E1(sigma0,H)) / (4 pi (sigma - sigma0)),
    b2 = E3(sigma0) / (2 pi (sigma - sigma0)),
    b3 = (E2 + E4(sigma0,H)) / (2 pi (sigma - sigma0)),

and the equivalent c-form N(sigma,T) <= c1 T + c2 log T + c3 with c1 = b1,
c2 = b2, c3 = -b1 H + b2 log H + b3 (from unrounded b's).  Everything is
kept unrounded internally; display rounding follows the table conventions
(round up at 4 decimals for b1, b2; ceiling for b3, c3).

For side-by-side comparisons the classical bounds are available with their
own validity gates: the zero-counting band N(T) = T/2pi log(T/2pi e) + 7/8
plus/minus (a log T + b log log T + c) in the Rosser (a=0.137, b=0.443,
c=1.588) and Trudgian (a=0.111, b=0.275, c=2.450) variants, the bound
157 (100000 T^3)^(1-sigma) log^(4-sigma)(100T) + 600 log^2(100T) valid for
T >= 2000, and 453472.54 T^(8/3 (1-sigma)) (log T)^5 valid only for
sigma >= 5/8 and T >= exp(exp(18)).  Out-of-validity cells are reported as
not-applicable markers carrying the reason, never extrapolated numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .errors import DomainError
from .moment import MomentErrorBreakdown, MomentParams, moment_bound
from .precision import DEFAULT_CONTEXT, PrecisionContext, Rounding
from .strip import DEFAULT_STRIP, E2_constant, E3_constant, E4_constant, StripParams

SIGMA1 = "1.5002"

ROSSER_BAND = {"rosser": ("0.137", "0.443", "1.588"),
               "trudgian": ("0.111", "0.275", "2.450")}

RAMARE_T_FLOOR = 2000
CHENG_SIGMA_FLOOR = 0.625  # 5/8
CHENG_CONSTANT = "453472.54"


@dataclass(frozen=True)
class DensityParams:
    """(sigma, sigma0, H, H_rh) inside the conditions box."""

    sigma: object
    sigma0: object
    H: object
    H_rh: object = MomentParams.__dataclass_fields__["H_rh"].default

    def __post_init__(self):
        # sigma0/H/H_rh constraints are the moment box
        MomentParams(sigma0=self.sigma0, H=self.H, H_rh=self.H_rh)
        with mp.workdps(50):
            sigma = mp.mpf(self.sigma)
            if not mp.mpf(self.sigma0) < sigma < mp.mpf(SIGMA1):
                raise DomainError(
                    f"sigma must lie in (sigma0, {SIGMA1}), got {self.sigma}")

    def moment_params(self) -> MomentParams:
        return MomentParams(sigma0=self.sigma0, H=self.H, H_rh=self.H_rh)


@dataclass(frozen=True)
class DensityCoefficients:
    """Unrounded coefficient bundle with its generating parameters."""

    b1: object
    b2: object
    b3: object
    c1: object
    c2: object
    c3: object
    params: DensityParams
    breakdown: MomentErrorBreakdown

    def display(self, ctx: PrecisionContext = DEFAULT_CONTEXT) -> dict:
        """Table-convention rounding: b1, b2 up at 4 decimals; b3, c3 ceiling."""
        return {
            "b1": ctx.format_decimal(self.b1, 4, Rounding.UP),
            "b2": ctx.format_decimal(self.b2, 4, Rounding.UP),
            "b3": ctx.ceil_int(self.b3),
            "c1": ctx.format_decimal(self.c1, 4, Rounding.UP),
            "c2": ctx.format_decimal(self.c2, 4, Rounding.UP),
            "c3": ctx.ceil_int(self.c3),
        }


@dataclass(frozen=True)
class NotApplicable:
    """Marker for a bound outside its validity region."""

    reason: str

    def __str__(self):
        return f"n/a ({self.reason})"


@dataclass(frozen=True)
class ComparisonRow:
    """One (sigma, T) cell with every bound evaluated or marked n/a."""

    sigma: float
    T: object
    this_bound: object
    rosser_half: object
    trudgian_half: object
    ramare: object
    cheng: object


def compute_coefficients(p: DensityParams,
                         ctx: PrecisionContext = DEFAULT_CONTEXT,
                         strip: StripParams = DEFAULT_STRIP) -> DensityCoefficients:
    """The (b1, b2, b3, c1, c2, c3) bundle at working precision."""
    with ctx.workdps():
        sigma = mp.mpf(p.sigma)
        sigma0 = mp.mpf(p.sigma0)
        H = mp.mpf(p.H)
        gap = sigma - sigma0
        mb = moment_bound(p.moment_params(), ctx)
        b1 = mp.log(mb.bound) / (4 * mp.pi * gap)
        b2 = E3_constant(sigma0, strip, ctx) / (2 * mp.pi * gap)
        b3 = (E2_constant(strip, ctx) + E4_constant(sigma0, H, strip, ctx)) \
            / (2 * mp.pi * gap)
        c3 = -b1 * H + b2 * mp.log(H) + b3
        return DensityCoefficients(b1=b1, b2=b2, b3=b3, c1=b1, c2=b2, c3=c3,
                                   params=p, breakdown=mb.breakdown)


def _bound_value(coeffs: DensityCoefficients, T,
                 ctx: PrecisionContext = DEFAULT_CONTEXT):
    """b1 (T-H) + b2 log(TH) + b3, ungated (internal identity tests only)."""
    with ctx.workdps():
        T = mp.mpf(T)
        H = mp.mpf(coeffs.params.H)
        return coeffs.b1 * (T - H) + coeffs.b2 * mp.log(T * H) + coeffs.b3


def bound_N(coeffs: DensityCoefficients, T,
            ctx: PrecisionContext = DEFAULT_CONTEXT):
    """The zero-count bound at height T >= H_rh: (value, integer ceiling)."""
    with ctx.workdps():
        T = mp.mpf(T)
        if T < mp.mpf(coeffs.params.H_rh):
            raise DomainError(
                f"T = {T} below H_rh = {coeffs.params.H_rh}; the bound "
                "hypothesis needs T >= H_rh")
        value = _bound_value(coeffs, T, ctx)
        return value, ctx.ceil_int(value)


def rosser_NT_band(T, variant: str = "rosser",
                   ctx: PrecisionContext = DEFAULT_CONTEXT):
    """(lower, upper) enclosure of the zero count N(T) for T > e."""
    if variant not in ROSSER_BAND:
        raise DomainError(f"unknown variant {variant!r}; "
                          f"expected one of {sorted(ROSSER_BAND)}")
    with ctx.workdps():
        T = mp.mpf(T)
        if T <= mp.e:
            raise DomainError(f"T must exceed e for the loglog term, got {T}")
        a, b, c = (mp.mpf(x) for x in ROSSER_BAND[variant])
        main = T / (2 * mp.pi) * mp.log(T / (2 * mp.pi * mp.e)) + mp.mpf(7) / 8
        band = a * mp.log(T) + b * mp.log(mp.log(T)) + c
        return main - band, main + band


def ramare_bound(sigma, T, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """157 (100000 T^3)^(1-sigma) log^(4-sigma)(100T) + 600 log^2(100T)."""
    with ctx.workdps():
        sigma = mp.mpf(sigma)
        T = mp.mpf(T)
        if T < RAMARE_T_FLOOR:
            raise DomainError(f"valid only for T >= {RAMARE_T_FLOOR}, got {T}")
        if not 0 < sigma < 1:
            raise DomainError(f"sigma must lie in (0, 1), got {sigma}")
        log100T = mp.log(100 * T)
        return (157 * mp.power(100_000 * T ** 3, 1 - sigma)
                * mp.power(log100T, 4 - sigma)
                + 600 * log100T ** 2)


def cheng_applicable(sigma, T, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """None if (sigma, T) is in the validity region, else the reason."""
    with ctx.workdps():
        if mp.mpf(T) <= 1 or mp.log(mp.mpf(T)) < mp.exp(18):
            return "T below exp(exp(18))"
    return None


def cheng_bound(sigma, T, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """453472.54 T^(8/3 (1-sigma)) (log T)^5, or a not-applicable marker."""
    with ctx.workdps():
        sigma = mp.mpf(sigma)
        if sigma < CHENG_SIGMA_FLOOR:
            raise DomainError(f"sigma must be >= 5/8, got {sigma}")
        reason = cheng_applicable(sigma, T, ctx)
        if reason is not None:
            return NotApplicable(reason)
        T = mp.mpf(T)
        return (mp.mpf(CHENG_CONSTANT) * mp.power(T, mp.mpf(8) / 3 * (1 - sigma))
                * mp.log(T) ** 5)


def compare(sigma, T_list, coeffs: DensityCoefficients,
            ctx: PrecisionContext = DEFAULT_CONTEXT) -> list[ComparisonRow]:
    """One row per T with every applicable bound, n/a markers elsewhere."""
    rows = []
    with ctx.workdps():
        sigma_mp = mp.mpf(sigma)
        for T in T_list:
            T_mp = mp.mpf(T)
            if T_mp >= mp.mpf(coeffs.params.H_rh):
                this = _bound_value(coeffs, T_mp, ctx)
            else:
                this = NotApplicable("T below H_rh")
            if T_mp > mp.e:
                rosser_half = rosser_NT_band(T_mp, "rosser", ctx)[1] / 2
                trudgian_half = rosser_NT_band(T_mp, "trudgian", ctx)[1] / 2
            else:
                rosser_half = NotApplicable("T <= e")
                trudgian_half = NotApplicable("T <= e")
            if T_mp >= RAMARE_T_FLOOR and 0 < sigma_mp < 1:
                ram = ramare_bound(sigma_mp, T_mp, ctx)
            else:
                ram = NotApplicable("outside T >= 2000, 0 < sigma < 1")
            if sigma_mp >= CHENG_SIGMA_FLOOR:
                cheng = cheng_bound(sigma_mp, T_mp, ctx)
            else:
                cheng = NotApplicable("sigma below 5/8")
            rows.append(ComparisonRow(sigma=float(sigma_mp), T=T_mp,
                                      this_bound=this,
                                      rosser_half=rosser_half,
                                      trudgian_half=trudgian_half,
                                      ramare=ram, cheng=cheng))
    return rows
