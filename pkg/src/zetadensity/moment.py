"""Explicit second-moment bound for zeta on the line Re s = sigma0.

For 0.5208 < sigma0 < 0.9723 and 10^3 <= H < H_rh, the mean square

    (1/(T-H)) int_H^T |zeta(sigma0 + it)|^2 dt   (T >= H_rh)

is bounded by zeta(2 sigma0) + E1(sigma0, H) with E1 = eps1 + eps2 + eps3:

  eps1: the off-diagonal sum bound, a seven-term bracket evaluated at
        H_rh times the prefactor 4 H_rh / (H_rh - H); its max(0, .) term
        vanishes for sigma0 below the sign change at 0.679785...;
  eps2: the remainder mean square, c0^2/(2 sigma0 - 1) *
        (H^-(2 sigma0 - 1) - H_rh^-(2 sigma0 - 1)) / (H_rh - H);
  eps3 = 2 sqrt(eps2 (zeta(2 sigma0) + eps1)), the Cauchy-Schwarz cross term.

H_rh is the height below which all zeros are verified on the critical
line; the paper value 3.061e10 is the default, and smaller values let the
whole inequality chain be exercised at desk scale (numeric_second_moment
integrates |zeta|^2 by step-doubled composite Simpson for exactly that).
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .approx import c0_corollary
from .errors import DomainError, SingularParameterError, UnsupportedHeightError
from .precision import DEFAULT_CONTEXT, PrecisionContext
from ._kernels import zeta_abs2_grid
from .zeta import zeta_real

H_RH_DEFAULT = 30_610_000_000  # 3.061e10, exact
SIGMA0_LO = "0.5208"
SIGMA0_HI = "0.9723"
DESK_HEIGHT_CEILING = 1.0e5
QUAD_REL_TOL = 1.0e-6


@dataclass(frozen=True)
class MomentParams:
    """sigma0, H and the verified-zero height H_rh (the RH-verified height).

    Fields accept int, float, mpf, or decimal strings; strings keep exact
    decimals like '0.6472' exact at any working precision downstream.
    """

    sigma0: object
    H: object
    H_rh: object = H_RH_DEFAULT

    def __post_init__(self):
        with mp.workdps(50):
            s0, H, Hr = mp.mpf(self.sigma0), mp.mpf(self.H), mp.mpf(self.H_rh)
            if not mp.mpf(SIGMA0_LO) < s0 < mp.mpf(SIGMA0_HI):
                raise DomainError(
                    f"sigma0 outside ({SIGMA0_LO}, {SIGMA0_HI}): {self.sigma0}")
            if H < 1000:
                raise DomainError(f"H must be >= 10^3, got {self.H}")
            if H == Hr:
                raise SingularParameterError(
                    "H = H_rh makes the 1/(H_rh - H) prefactor singular")
            if H > Hr:
                raise DomainError(
                    f"H must be below H_rh = {self.H_rh}, got {self.H}")


@dataclass(frozen=True)
class MomentErrorBreakdown:
    """eps1..eps3 with their sum, and the T = H_rh sub-term values."""

    eps1: object
    eps2: object
    eps3: object
    E1_total: object
    e11: object
    e12: object
    e13: object
    e14: object


def e1_subterms(sigma0, T, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """The four off-diagonal sub-terms at (sigma0, T).

    Accepts 0.5208 < sigma0 <= 0.9723 (the monotonicity statements hold up
    to and including the endpoint) and T >= 2.
    """
    with ctx.workdps():
        s0 = mp.mpf(sigma0)
        T = mp.mpf(T)
        if not mp.mpf(SIGMA0_LO) < s0 <= mp.mpf(SIGMA0_HI):
            raise DomainError(
                f"sigma0 outside ({SIGMA0_LO}, {SIGMA0_HI}]: {sigma0}")
        if T < 2:
            raise DomainError(f"T must be >= 2, got {T}")
        lnT = mp.log(T)
        one = 1 - s0
        e11 = lnT * mp.power(T, 1 - 2 * s0) / (2 * one) \
            - (2 * s0 - 1) / (2 * one) * lnT / T
        e12 = e12_numerator(s0, ctx) / T
        e13 = (2 - s0) / (2 * one ** 2) * mp.power(T, 1 - 2 * s0) \
            - s0 * mp.power(T, -s0) / one ** 2
        e14 = mp.power(T, -2 * s0) / (2 * (2 * s0 - 1)) \
            + mp.power(T, -2 * s0 - 1) / 2
        return e11, e12, e13, e14


def e12_numerator(sigma0, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """(1 - 3 sigma0 + 3 sigma0^2) / (2 (1-sigma0)^2) - zeta(2 sigma0)/2.

    Negative below the sign change at sigma0 = 0.679785..., positive above.
    """
    with ctx.workdps():
        s0 = mp.mpf(sigma0)
        return (1 - 3 * s0 + 3 * s0 ** 2) / (2 * (1 - s0) ** 2) \
            - zeta_real(2 * s0, ctx) / 2


def e12_sign_change(ctx: PrecisionContext = DEFAULT_CONTEXT,
                    lo=0.66, hi=0.70, tol=1.0e-9):
    """Bisect the e12 numerator's sign change inside [lo, hi]."""
    with ctx.workdps():
        lo = mp.mpf(lo)
        hi = mp.mpf(hi)
        flo = e12_numerator(lo, ctx)
        fhi = e12_numerator(hi, ctx)
        if not flo < 0 < fhi:
            raise DomainError(
                f"[{lo}, {hi}] does not bracket the sign change")
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if e12_numerator(mid, ctx) < 0:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2


def epsilon1(p: MomentParams, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """The seven-term off-diagonal bound at H_rh, with its H prefactor."""
    with ctx.workdps():
        s0 = mp.mpf(p.sigma0)
        H = mp.mpf(p.H)
        Hr = mp.mpf(p.H_rh)
        L = mp.log(Hr)
        one = 1 - s0
        bracket = (L * mp.power(Hr, 1 - 2 * s0) / (2 * one)
                   - (2 * s0 - 1) / (2 * one) * L / Hr
                   + max(mp.mpf(0), e12_numerator(s0, ctx)) / Hr
                   + (2 - s0) * mp.power(Hr, 1 - 2 * s0) / (2 * one ** 2)
                   - s0 * mp.power(Hr, -s0) / one ** 2
                   + mp.power(Hr, -2 * s0) / (2 * (2 * s0 - 1))
                   + mp.power(Hr, -2 * s0 - 1) / 2)
        return 4 * Hr / (Hr - H) * bracket


def epsilon2(p: MomentParams, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """c0^2/(2 sigma0 - 1) * (H^-(2s0-1) - H_rh^-(2s0-1)) / (H_rh - H)."""
    with ctx.workdps():
        s0 = mp.mpf(p.sigma0)
        H = mp.mpf(p.H)
        Hr = mp.mpf(p.H_rh)
        c0 = c0_corollary(ctx)
        e = 2 * s0 - 1
        return c0 ** 2 / e * (mp.power(H, -e) - mp.power(Hr, -e)) / (Hr - H)


def epsilon3(p: MomentParams, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """2 sqrt(eps2 (zeta(2 sigma0) + eps1))."""
    with ctx.workdps():
        return 2 * mp.sqrt(epsilon2(p, ctx)
                           * (zeta_real(2 * mp.mpf(p.sigma0), ctx)
                              + epsilon1(p, ctx)))


@dataclass(frozen=True)
class MomentBound:
    """zeta(2 sigma0) + E1 with its error breakdown."""

    params: MomentParams
    breakdown: MomentErrorBreakdown
    zeta_2sigma0: object
    bound: object


def moment_bound(p: MomentParams, ctx: PrecisionContext = DEFAULT_CONTEXT) -> MomentBound:
    """The mean-square bound zeta(2 sigma0) + E1(sigma0, H) with breakdown."""
    with ctx.workdps():
        e1 = epsilon1(p, ctx)
        e2 = epsilon2(p, ctx)
        z = zeta_real(2 * mp.mpf(p.sigma0), ctx)
        e3 = 2 * mp.sqrt(e2 * (z + e1))
        total = e1 + e2 + e3
        sub = e1_subterms(p.sigma0, p.H_rh, ctx)
        breakdown = MomentErrorBreakdown(eps1=e1, eps2=e2, eps3=e3,
                                         E1_total=total,
                                         e11=sub[0], e12=sub[1],
                                         e13=sub[2], e14=sub[3])
        return MomentBound(params=p, breakdown=breakdown, zeta_2sigma0=z,
                           bound=z + total)


def log_moment_integral_bound(p: MomentParams, T,
                              ctx: PrecisionContext = DEFAULT_CONTEXT):
    """(T - H)/2 * log(zeta(2 sigma0) + E1): bounds int_H^T log|zeta| dt."""
    with ctx.workdps():
        T = mp.mpf(T)
        return (T - mp.mpf(p.H)) / 2 * mp.log(moment_bound(p, ctx).bound)


# -- desk-scale quadrature oracle ---------------------------------------


def _grid_values(sigma0: float, t0: float, h: float, J: int):
    """Kernel values on a uniform grid, split so each block's truncation
    stays within 2x of what its own heights need."""
    out = np.empty(J)
    j = 0
    while j < J:
        t_here = t0 + j * h
        # block until the truncation point would double
        span_limit = t_here  # N(t) linear in t: doubles at 2 t_here
        j_end = min(J, int((t_here + span_limit - t0) / h) + 1)
        j_end = max(j_end, j + 1)
        out[j:j_end] = zeta_abs2_grid(sigma0, t_here, h, j_end - j)
        j = j_end
    return out


def numeric_second_moment(sigma0, H, T,
                          ctx: PrecisionContext = DEFAULT_CONTEXT,
                          rel_tol: float = QUAD_REL_TOL,
                          return_detail: bool = False):
    """(1/(T-H)) int_H^T |zeta(sigma0+it)|^2 dt by step-doubled Simpson.

    Composite trapezoid sums are doubled until the derived Simpson value
    moves by less than rel_tol relative; the kernel works in float64
    (accuracy ~1e-10, far below rel_tol).  Desk scale only: T <= 1e5.
    """
    sigma0 = float(sigma0)
    H = float(H)
    T = float(T)
    if not 0 < sigma0 < 1.5002:
        raise DomainError(f"sigma0 out of kernel range (0, 1.5002): {sigma0}")
    if H < 2:
        raise DomainError(f"H must be >= 2, got {H}")
    if T == H:
        raise DomainError("empty integration interval: T = H")
    if T < H:
        raise DomainError(f"T must exceed H, got T = {T} < H = {H}")
    if T > DESK_HEIGHT_CEILING:
        raise UnsupportedHeightError(
            f"T = {T} above the desk-scale ceiling {DESK_HEIGHT_CEILING:g}")

    span = T - H
    n = 1
    while span / n > 0.5:
        n *= 2
    h = span / n
    v = _grid_values(sigma0, H, h, n + 1)
    trap = h * (v.sum() - 0.5 * v[0] - 0.5 * v[-1])
    simpson_prev = None
    levels = 0
    while n <= 2 ** 26:
        h2 = h / 2
        mid_sum = _grid_values(sigma0, H + h2, h, n).sum()
        trap2 = trap / 2 + h2 * mid_sum
        simpson = (4 * trap2 - trap) / 3
        levels += 1
        if simpson_prev is not None and \
                abs(simpson - simpson_prev) <= rel_tol * abs(simpson):
            mean = simpson / span
            if return_detail:
                return mean, {"final_step": h2, "levels": levels,
                              "integral": simpson}
            return mean
        simpson_prev = simpson
        trap, h, n = trap2, h2, 2 * n
    raise RuntimeError("quadrature failed to converge")
