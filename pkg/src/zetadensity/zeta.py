"""High-precision zeta evaluation via Euler-Maclaurin summation.

The evaluator is the classical identity

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{k=1..M} B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(1-s-2k) + R_M

with the standard remainder bound

    |R_M| <= |B_(2M+2)/(2M+2)! * s(s+1)...(s+2M) * N^(-s-2M-1)|
             * |s + 2M + 1| / (sigma + 2M + 1).

The truncation point is N = ceil(C * (|t| + 3.33 * D)) with C = 1/2 and D
the working decimal digits; the correction order M is then raised until the
remainder bound drops below the requested tolerance (N is doubled in the
rare case that never happens).  All arithmetic is mpmath at the working
precision of the supplied PrecisionContext, so returned values carry the
documented absolute error bounds.

The inner partial sums run on mpmath.libmp primitives with per-precision
caches of log n and n^-sigma; that trims the per-term cost roughly in half,
which matters because the verification sweeps evaluate zeta tens of
thousands of times.

Also here: the von Mangoldt function (prime-power trial division plus a
smallest-prime-factor sieve for ranges) and ascending-order Dirichlet
partial sums, the other arithmetic primitives the bound chain needs.
"""

from __future__ import annotations

import math

import mpmath as mp
from mpmath import libmp

from .errors import DomainError, PoleError, UnsupportedHeightError
from .precision import DEFAULT_CONTEXT, ComplexPoint, PrecisionContext

HEIGHT_CEILING = 1.0e7  # documents the cost model: N grows linearly with |t|

_TRUNCATION_C = 0.5  # N >= C * (|t| + working digits)

_ROUND = libmp.round_nearest

# per-precision caches; bounded by the desk-scale heights this package serves
_LOG_CACHE: dict[int, list] = {}
_AMP_CACHE: dict[tuple, list] = {}
_COEF_CACHE: dict[int, tuple] = {}
_CACHE_MAX = 400_000


def _raw_logs(limit: int) -> list:
    """Raw-mpf log n for n < limit at the current precision, memoized."""
    prec = mp.mp.prec
    cache = _LOG_CACHE.setdefault(prec, [libmp.fzero, libmp.fzero])
    if limit <= _CACHE_MAX:
        while len(cache) < limit:
            cache.append(libmp.mpf_log(libmp.from_int(len(cache)), prec + 10, _ROUND))
        return cache
    return [libmp.mpf_log(libmp.from_int(max(n, 1)), prec + 10, _ROUND)
            for n in range(limit)]


def _raw_amps(sigma, limit: int) -> list:
    """Raw-mpf n^-sigma for n < limit, memoized per (precision, sigma)."""
    prec = mp.mp.prec
    key = (prec, sigma._mpf_)
    logs = _raw_logs(limit)
    cache = _AMP_CACHE.setdefault(key, [libmp.fzero, libmp.fone])
    if limit <= _CACHE_MAX:
        neg_sig = libmp.mpf_neg(sigma._mpf_)
        while len(cache) < limit:
            x = libmp.mpf_mul(neg_sig, logs[len(cache)], prec, _ROUND)
            cache.append(libmp.mpf_exp(x, prec, _ROUND))
        return cache
    neg_sig = libmp.mpf_neg(sigma._mpf_)
    return [libmp.mpf_exp(libmp.mpf_mul(neg_sig, logs[n], prec, _ROUND), prec, _ROUND)
            if n else libmp.fzero for n in range(limit)]


def _phased_sum(sigma, t, limit: int):
    """sum_{1 <= n < limit} n^-(sigma+it) as an mpc, ascending n."""
    prec = mp.mp.prec
    logs = _raw_logs(limit)
    amps = _raw_amps(sigma, limit)
    if t == 0:
        acc = libmp.fzero
        for n in range(1, limit):
            acc = libmp.mpf_add(acc, amps[n], prec, _ROUND)
        return mp.mpc(mp.mpf(acc), 0)
    t_raw = t._mpf_
    re_acc = libmp.fzero
    im_acc = libmp.fzero
    for n in range(1, limit):
        x = libmp.mpf_neg(libmp.mpf_mul(t_raw, logs[n], prec, _ROUND))
        c, sn = libmp.mpf_cos_sin(x, prec, _ROUND)
        a = amps[n]
        re_acc = libmp.mpf_add(re_acc, libmp.mpf_mul(a, c, prec, _ROUND), prec, _ROUND)
        im_acc = libmp.mpf_add(im_acc, libmp.mpf_mul(a, sn, prec, _ROUND), prec, _ROUND)
    return mp.mpc(mp.mpf(re_acc), mp.mpf(im_acc))


def _real_sum_with_derivative(sigma, limit: int):
    """(sum n^-sigma, -sum log(n) n^-sigma) over 1 <= n < limit, real sigma."""
    prec = mp.mp.prec
    logs = _raw_logs(limit)
    amps = _raw_amps(sigma, limit)
    acc = libmp.fzero
    dacc = libmp.fzero
    for n in range(1, limit):
        acc = libmp.mpf_add(acc, amps[n], prec, _ROUND)
        dacc = libmp.mpf_add(dacc, libmp.mpf_mul(logs[n], amps[n], prec, _ROUND),
                             prec, _ROUND)
    return mp.mpf(acc), -mp.mpf(dacc)


def _bk_coeffs(kmax: int) -> tuple:
    """(b_1, ratios, babs) for b_k = B_2k/(2k)! at the current precision.

    ratios[k] = b_(k+1)/b_k and babs[k] = |b_k|, valid for 1 <= k <= kmax.
    """
    prec = mp.mp.prec
    cached = _COEF_CACHE.get(prec)
    if cached is not None and len(cached[1]) > kmax:
        return cached
    b = [mp.mpf(0)]
    for k in range(1, kmax + 2):
        b.append(mp.bernoulli(2 * k) / mp.factorial(2 * k))
    ratios = [mp.mpf(0)] + [b[k + 1] / b[k] for k in range(1, kmax + 1)]
    babs = [mp.mpf(0)] + [abs(b[k]) for k in range(1, kmax + 1)]
    out = (b[1], ratios, babs)
    _COEF_CACHE[prec] = out
    return out


def _em_truncation(t_abs: float, dps: int) -> int:
    return max(8, int(math.ceil(_TRUNCATION_C * (t_abs + 3.33 * dps))))


def _em_zeta(s, eps, want_derivative: bool = False):
    """Euler-Maclaurin zeta(s), optionally with zeta'(s), at current precision.

    `s` is mpf or mpc, s != 1.  The absolute error of each returned value
    is below `eps` by the remainder bound.  The derivative path is only
    used for real s (its remainder bound assumes sigma + j = |s + j|).
    """
    is_real = not isinstance(s, mp.mpc)
    sigma = s if is_real else s.real
    t = mp.mpf(0) if is_real else s.imag
    N = _em_truncation(abs(float(t)), mp.mp.dps)
    kcap = 4 * mp.mp.dps + 200
    b1, ratios, babs = _bk_coeffs(kcap)

    for _boost in range(6):
        if want_derivative:
            acc, dacc = _real_sum_with_derivative(sigma, N)
        else:
            acc = _phased_sum(sigma, t, N)
            if is_real:
                acc = acc.real
            dacc = None
        lnN = mp.mpf(_raw_logs(N + 1)[N])
        Npow = mp.exp(-s * lnN)  # N^-s
        acc += N * Npow / (s - 1) + Npow / 2
        if want_derivative:
            dacc += -lnN * N * Npow / (s - 1) - N * Npow / (s - 1) ** 2
            dacc += -lnN * Npow / 2

        # correction terms T_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(1-s-2k),
        # carried as a single recurrence to avoid forming huge factors;
        # qsum = sum of 1/(s+j) over the Pochhammer factors feeds T_k'.
        term = b1 * s * Npow / N
        qsum = 1 / s if want_derivative else None
        Nsq = mp.mpf(N) * N
        k = 1
        while k < kcap:
            acc += term
            if want_derivative:
                dacc += term * (qsum - lnN)
            term_next = term * ratios[k] * ((s + (2 * k - 1)) * (s + 2 * k)) / Nsq
            rem = abs(term_next) * abs(s + (2 * k + 1)) / (sigma + 2 * k + 1)
            if rem < eps:
                if not want_derivative:
                    return acc
                # derivative remainder, from differentiating the integral
                # form of R_M (M = k) and bounding the periodized Bernoulli
                # function by 4 (2M+1)!/(2pi)^(2M+1)
                m2 = 2 * k
                pochmag = abs(term_next) / babs[k + 1] * mp.exp((sigma + m2 + 1) * lnN)
                qn = abs(qsum + 1 / (s + (m2 - 1)) + 1 / (s + m2))
                drem = (4 * mp.power(2 * mp.pi, -(m2 + 1)) * pochmag
                        * mp.exp(-(sigma + m2) * lnN)
                        * ((qn + lnN) / (sigma + m2) + 1 / (sigma + m2) ** 2))
                if drem < eps:
                    return acc, dacc
            term = term_next
            if want_derivative:
                qsum += 1 / (s + (2 * k - 1)) + 1 / (s + 2 * k)
            k += 1
        N *= 2
    raise RuntimeError("Euler-Maclaurin failed to meet its error bound")


def zeta_real(sigma, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta(sigma) for real sigma > 1, absolute error < 10^-(digits-5)."""
    with ctx.workdps():
        sigma = mp.mpf(sigma)
        if sigma <= 1:
            raise DomainError(f"zeta_real requires sigma > 1, got {sigma}")
        return _em_zeta(sigma, mp.power(10, -(ctx.digits + 5)))


def zeta_complex(s, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta(sigma + it) for s != 1, |t| <= 1e7; absolute error < 10^-(digits/2)."""
    pt = ComplexPoint.coerce(s)
    if abs(pt.t) > HEIGHT_CEILING:
        raise UnsupportedHeightError(
            f"|t| = {abs(pt.t)} above the supported ceiling {HEIGHT_CEILING:g}")
    with ctx.workdps():
        z = mp.mpc(mp.mpf(pt.sigma), mp.mpf(pt.t))
        if z == 1:
            raise PoleError("zeta has a pole at s = 1")
        if z.imag == 0:
            value = _em_zeta(z.real, mp.power(10, -ctx.digits))
            return mp.mpc(value, 0)
        return _em_zeta(z, mp.power(10, -ctx.digits))


def log_deriv_zeta_real(sigma, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta'/zeta(sigma) for real sigma > 1, absolute error < 10^-(digits-5).

    Equals -sum_n Lambda(n) n^-sigma; that Dirichlet series has a
    polynomially decaying tail, so here numerator and denominator are
    evaluated by the Euler-Maclaurin engine (the series is kept as an
    independent test oracle).
    """
    with ctx.workdps():
        sigma = mp.mpf(sigma)
        if sigma <= 1:
            raise DomainError(f"log_deriv_zeta_real requires sigma > 1, got {sigma}")
        z, dz = _em_zeta(sigma, mp.power(10, -(ctx.digits + 10)),
                         want_derivative=True)
        return dz / z


def dirichlet_partial_sum(s, x, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """sum_{1 <= n < x} n^-s, summed in ascending n; empty when x <= 1."""
    pt = ComplexPoint.coerce(s)
    if x < 0:
        raise DomainError(f"upper limit must be >= 0, got {x}")
    with ctx.workdps():
        if x <= 1:
            return mp.mpc(0)
        top = int(mp.ceil(mp.mpf(x))) - 1  # largest n with n < x
        return _phased_sum(mp.mpf(pt.sigma), mp.mpf(pt.t), top + 1)


# -- von Mangoldt ------------------------------------------------------


def prime_power_base(n: int) -> int:
    """p if n = p^k for a prime p and k >= 1, else 0."""
    if n < 2:
        return 0
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            return p if m == 1 else 0
        p += 1 if p == 2 else 2
    return m  # n is prime


def mangoldt(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Lambda(n): log p when n = p^k, else 0."""
    if n < 1:
        raise DomainError(f"mangoldt requires n >= 1, got {n}")
    p = prime_power_base(n)
    with ctx.workdps():
        return mp.log(p) if p else mp.mpf(0)


def prime_power_bases(limit: int) -> list[tuple[int, int]]:
    """(n, p) for every prime power n = p^k <= limit, via an SPF sieve."""
    if limit < 2:
        return []
    spf = list(range(limit + 1))
    for p in range(2, int(limit ** 0.5) + 1):
        if spf[p] == p:
            for multiple in range(p * p, limit + 1, p):
                if spf[multiple] == multiple:
                    spf[multiple] = p
    out = []
    for n in range(2, limit + 1):
        p = spf[n]
        m = n
        while m % p == 0:
            m //= p
        if m == 1:
            out.append((n, p))
    return out
