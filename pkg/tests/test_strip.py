"""Tests for the log-integral and argument-integral constants."""

import mpmath as mp
import pytest

from zetadensity.errors import DomainError
from zetadensity.precision import ComplexPoint, Rounding
from zetadensity.strip import (
    DEFAULT_STRIP,
    E2_constant,
    E3_constant,
    E4_constant,
    StripParams,
    default_rademacher_sample,
    rademacher_rhs,
    verify_rademacher,
)

# ORACLE: independent 200-digit transcription (mp.zeta, trial-division sieve)
E2_ORACLE = "1.76549601051334874082003056586389577629852015"
E4_REF_ORACLE = "139.279928736397287053182327201037344091294196"


class TestE2:
    def test_reference_value_rounds_up_to_published(self, ctx):
        v = E2_constant(DEFAULT_STRIP, ctx)
        assert ctx.format_decimal(v, 4, Rounding.UP) == "1.7655"
        with ctx.workdps():
            assert abs(v - mp.mpf(E2_ORACLE)) < 1e-40

    def test_positive(self, ctx):
        assert E2_constant(DEFAULT_STRIP, ctx) > 0

    def test_coarser_truncation_weakens_bound(self, ctx):
        # larger N0 sharpens (lowers) the constant
        v1000 = E2_constant(StripParams(N0=1000), ctx)
        v10000 = E2_constant(StripParams(N0=10000), ctx)
        v100 = E2_constant(StripParams(N0=100), ctx)
        assert v100 > v1000 > v10000 > 0

    def test_n2_term_identity(self, ctx):
        # the n = 2 summand with its 1/(log n)^2 weight alone is
        # log2 * 2^-sigma1 / (log2)^2 = 1/(log2 * 2^sigma1)
        with ctx.workdps():
            sigma1 = DEFAULT_STRIP.sigma1(ctx)
            term = mp.log(2) * mp.power(2, -sigma1) / mp.log(2) ** 2
            assert abs(term - 1 / (mp.log(2) * mp.power(2, sigma1))) < mp.mpf(10) ** -60

    def test_n0_floor(self):
        with pytest.raises(DomainError):
            StripParams(N0=50)


class TestE3:
    def test_linear_in_distance(self, ctx):
        # E3(sigma0)/(sigma1 - sigma0) is one fixed constant
        with ctx.workdps():
            sigma1 = DEFAULT_STRIP.sigma1(ctx)
            want = mp.pi * (1 + 2 * mp.mpf(DEFAULT_STRIP.eta)) / (4 * mp.log(2))
            for s0 in ("0.5229", "0.6472", "0.9", "1.2"):
                ratio = E3_constant(s0, DEFAULT_STRIP, ctx) / (sigma1 - mp.mpf(s0))
                assert abs(ratio - want) < mp.mpf(10) ** -55

    def test_reference_point_magnitude(self, ctx):
        v = E3_constant("0.6472", DEFAULT_STRIP, ctx)
        assert 0.9667 < v < 0.9668

    def test_rejects_sigma0_at_or_above_sigma1(self, ctx):
        with pytest.raises(DomainError):
            E3_constant("1.5002", DEFAULT_STRIP, ctx)


class TestE4:
    def test_reference_value(self, ctx):
        v = E4_constant("0.6472", 483393, DEFAULT_STRIP, ctx)
        assert 138 < v < 141
        with ctx.workdps():
            assert abs(v - mp.mpf(E4_REF_ORACLE)) < 1e-40

    def test_decreasing_in_H(self, ctx):
        s0 = "0.6472"
        vals = [E4_constant(s0, H, DEFAULT_STRIP, ctx)
                for H in (10 ** 3, 10 ** 6, 30_610_000_000)]
        assert vals[0] > vals[1] > vals[2]

    def test_strictly_decreasing_sampled(self, ctx):
        s0 = "0.60"
        hs = [2 * 4 ** k for k in range(10)]
        vals = [E4_constant(s0, h, DEFAULT_STRIP, ctx) for h in hs]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_linear_in_sigma1_minus_sigma0(self, ctx):
        with ctx.workdps():
            sigma1 = DEFAULT_STRIP.sigma1(ctx)
            a = E4_constant("0.60", 5000, DEFAULT_STRIP, ctx)
            b = E4_constant("0.90", 5000, DEFAULT_STRIP, ctx)
            want = (sigma1 - mp.mpf("0.60")) / (sigma1 - mp.mpf("0.90"))
            assert abs(a / b - want) < mp.mpf(10) ** -50

    def test_H_floor(self, ctx):
        with pytest.raises(DomainError):
            E4_constant("0.6472", 1.0, DEFAULT_STRIP, ctx)


class TestRademacher:
    def test_empty_sample_vacuous(self, ctx):
        r = verify_rademacher(sample=(), ctx=ctx)
        assert r.passed and r.worst_ratio == 0 and r.points_checked == 0

    def test_single_point(self, ctx):
        r = verify_rademacher(sample=[ComplexPoint(0.5, 100.0)], ctx=ctx)
        assert r.passed
        assert r.worst_ratio < 1

    def test_small_sample_passes(self, ctx):
        pts = default_rademacher_sample(count=25, t_hi=1000.0)
        r = verify_rademacher(sample=pts, ctx=ctx)
        assert r.passed
        assert r.points_checked == 25

    def test_rhs_positive_and_finite(self, ctx):
        v = rademacher_rhs(ComplexPoint(0.0, 10.0), "0.0001", ctx)
        assert v > 0

    def test_outside_strip_rejected(self, ctx):
        with pytest.raises(DomainError):
            verify_rademacher(sample=[ComplexPoint(0.7, 10.0), ComplexPoint(2.0, 10.0)],
                              ctx=ctx)
