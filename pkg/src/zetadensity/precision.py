"""Working precision and directed output rounding.

All arithmetic in this package runs through mpmath at a working precision
derived from a PrecisionContext.  Internally every operation carries
GUARD_DIGITS extra decimal digits so that the documented error bounds of
the evaluators stay far below the digits the caller asked for.

Directed rounding happens only when a value is formatted for output:
published upper-bound constants are rounded toward +infinity so that the
printed number remains a valid upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import mpmath as mp

from .errors import DomainError

GUARD_DIGITS = 15

# Values closer than 10^-BOUNDARY_GUARD to a decimal boundary are snapped to
# it before directed rounding.  Computed constants here are transcendental
# combinations that never sit this close to a 4-decimal boundary, while
# exact decimal inputs (e.g. mpf('2.1946')) parse to within 10^-dps of one.
BOUNDARY_GUARD = 30


class Rounding(Enum):
    """Directed rounding applied at output formatting only."""

    UP = "toward-plus-infinity"
    DOWN = "toward-minus-infinity"
    NEAREST = "nearest"


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision and rounding discipline for all evaluations.

    digits: working decimal digits (>= 30).
    output_digits: decimal places used when formatting results.
    rounding: directed rounding mode for formatted output; upper-bound
        quantities must use Rounding.UP.
    """

    digits: int = 60
    output_digits: int = 4
    rounding: Rounding = Rounding.UP

    def __post_init__(self):
        if self.digits < 30:
            raise DomainError(f"digits must be >= 30, got {self.digits}")
        if self.output_digits < 1:
            raise DomainError(f"output_digits must be >= 1, got {self.output_digits}")

    @property
    def working_dps(self) -> int:
        return self.digits + GUARD_DIGITS

    def workdps(self):
        """Context manager setting mpmath to the working precision."""
        return mp.workdps(self.working_dps)

    def mpf(self, x) -> mp.mpf:
        with self.workdps():
            return mp.mpf(x)

    # -- directed decimal rounding ------------------------------------

    def scaled_int(self, x, places: int | None = None,
                   rounding: Rounding | None = None) -> int:
        """Integer n such that n / 10^places is x rounded per `rounding`.

        Exact in the directed sense up to the boundary guard: a value
        within 10^-BOUNDARY_GUARD of a decimal boundary is treated as
        sitting exactly on it.
        """
        places = self.output_digits if places is None else places
        rounding = self.rounding if rounding is None else rounding
        with self.workdps():
            y = mp.mpf(x) * mp.power(10, places)
            nearest = mp.nint(y)
            if abs(y - nearest) < mp.power(10, -BOUNDARY_GUARD):
                return int(nearest)
            if rounding is Rounding.UP:
                return int(mp.ceil(y))
            if rounding is Rounding.DOWN:
                return int(mp.floor(y))
            return int(nearest)

    def round_decimal(self, x, places: int | None = None,
                      rounding: Rounding | None = None) -> mp.mpf:
        """x rounded to `places` decimals per `rounding`, as an mpf."""
        places = self.output_digits if places is None else places
        n = self.scaled_int(x, places, rounding)
        with self.workdps():
            return mp.mpf(n) / mp.power(10, places)

    def format_decimal(self, x, places: int | None = None,
                       rounding: Rounding | None = None) -> str:
        """Fixed-point decimal string of x rounded per `rounding`."""
        places = self.output_digits if places is None else places
        n = self.scaled_int(x, places, rounding)
        sign = "-" if n < 0 else ""
        n = abs(n)
        whole, frac = divmod(n, 10 ** places)
        if places == 0:
            return f"{sign}{whole}"
        return f"{sign}{whole}.{frac:0{places}d}"

    def ceil_int(self, x) -> int:
        """Ceiling of x as an integer (snapping near-integers exactly)."""
        return self.scaled_int(x, places=0, rounding=Rounding.UP)

    def nstr(self, x, n: int | None = None) -> str:
        """Full-precision decimal string (default: all working digits)."""
        with self.workdps():
            return mp.nstr(mp.mpf(x) if not isinstance(x, mp.mpc) else x,
                           n or self.digits)


@dataclass(frozen=True)
class ComplexPoint:
    """A point s = sigma + i t of the complex plane."""

    sigma: float
    t: float

    @classmethod
    def coerce(cls, s) -> "ComplexPoint":
        """Accept a ComplexPoint, a (sigma, t) pair, or a complex-like."""
        if isinstance(s, cls):
            return s
        if isinstance(s, tuple) and len(s) == 2:
            return cls(s[0], s[1])
        if isinstance(s, (int, float, mp.mpf)):
            return cls(s, 0.0)
        if isinstance(s, (complex, mp.mpc)):
            return cls(s.real, s.imag)
        raise DomainError(f"cannot interpret {s!r} as a complex point")


DEFAULT_CONTEXT = PrecisionContext()
