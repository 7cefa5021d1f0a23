"""Tests for the second-moment error chain and the quadrature oracle."""

import mpmath as mp
import pytest

from zetadensity.errors import (
    DomainError,
    SingularParameterError,
    UnsupportedHeightError,
)
from zetadensity.moment import (
    MomentParams,
    e1_subterms,
    e12_numerator,
    e12_sign_change,
    epsilon1,
    epsilon2,
    epsilon3,
    moment_bound,
    log_moment_integral_bound,
    numeric_second_moment,
)

# ORACLE: independent 200-digit transcription at sigma0 = 0.6472, H = 483393,
# H_rh = 3.061e10 (mp.zeta, direct formula evaluation)
EPS1_ORACLE = "0.129805126760316475581504687093371487751653053"
EPS2_ORACLE = "1.08985642051721370586700394750391093975665099e-11"
EPS3_ORACLE = "1.34095576665550644675372088511964567578746003e-5"
BOUND_ORACLE = "4.12478235682425555704476933322874728158487957"

REF = MomentParams(sigma0="0.6472", H=483393)


class TestParams:
    def test_box_enforced(self):
        with pytest.raises(DomainError):
            MomentParams(sigma0="0.5208", H=10 ** 4)
        with pytest.raises(DomainError):
            MomentParams(sigma0="0.99", H=10 ** 4)
        with pytest.raises(DomainError):
            MomentParams(sigma0="0.6472", H=999)

    def test_H_equal_H_rh_singular(self):
        with pytest.raises(SingularParameterError):
            MomentParams(sigma0="0.6472", H=10 ** 4, H_rh=10 ** 4)


class TestEpsilons:
    def test_eps1_against_oracle(self, ctx):
        v = epsilon1(REF, ctx)
        assert 0.125 < v < 0.135
        with ctx.workdps():
            assert abs(v - mp.mpf(EPS1_ORACLE)) < 1e-40

    def test_eps1_max_term_vanishes_at_sign_change(self, ctx):
        # at the sign-change point the max(0, .) contribution is exactly 0,
        # so eps1 there equals the bracket without that term
        root = e12_sign_change(ctx)
        with ctx.workdps():
            assert abs(e12_numerator(root, ctx)) < 1e-8

    def test_eps1_prefactor_scaling(self, ctx):
        # halving H_rh - H (with the bracket pinned by H_rh) doubles eps1
        # up to the tiny residual H-dependence of nothing else
        base = MomentParams(sigma0="0.6472", H=10 ** 4, H_rh=2 * 10 ** 4)
        near = MomentParams(sigma0="0.6472", H=1.5 * 10 ** 4, H_rh=2 * 10 ** 4)
        with ctx.workdps():
            ratio = epsilon1(near, ctx) / epsilon1(base, ctx)
            assert abs(ratio - 2) < 0.01 * 2

    def test_eps2_against_oracle(self, ctx):
        v = epsilon2(REF, ctx)
        assert 1e-12 < v < 1e-10
        with ctx.workdps():
            assert abs(v - mp.mpf(EPS2_ORACLE)) < 1e-40

    def test_eps2_monotone_decreasing_in_H(self, ctx):
        vals = [epsilon2(MomentParams(sigma0="0.6472", H=H), ctx)
                for H in (10 ** 3, 10 ** 5, 10 ** 7)]
        assert vals[0] > vals[1] > vals[2] > 0

    def test_eps3_identity_and_oracle(self, ctx):
        v3 = epsilon3(REF, ctx)
        assert 1e-6 < v3 < 1e-4
        with ctx.workdps():
            assert abs(v3 - mp.mpf(EPS3_ORACLE)) < 1e-40

    def test_all_positive_on_sample_box(self, ctx):
        for s0 in ("0.53", "0.60", "0.679785", "0.75", "0.97"):
            for H in (10 ** 3, 10 ** 5, 10 ** 7, 10 ** 9, 3 * 10 ** 10):
                p = MomentParams(sigma0=s0, H=H)
                assert epsilon1(p, ctx) > 0
                assert epsilon2(p, ctx) > 0
                assert epsilon3(p, ctx) > 0


class TestMomentBound:
    def test_reference_bound(self, ctx):
        mb = moment_bound(REF, ctx)
        assert 4.10 < mb.bound < 4.15
        with ctx.workdps():
            assert abs(mb.bound - mp.mpf(BOUND_ORACLE)) < 1e-40

    def test_bound_exceeds_zeta(self, ctx):
        mb = moment_bound(REF, ctx)
        assert mb.bound > mb.zeta_2sigma0

    def test_bound_decreasing_in_H_below_interior_minimum(self, ctx):
        vals = [moment_bound(MomentParams(sigma0="0.6472", H=H), ctx).bound
                for H in (10 ** 3, 10 ** 4, 10 ** 5)]
        assert vals[0] > vals[1] > vals[2]

    def test_bound_has_interior_minimum_near_reference_H(self, ctx):
        # eps1 grows and eps3 shrinks with H, so the bound dips at an
        # interior H* and turns back up well before the 1/(H_rh - H)
        # blow-up; the reference H = 483393 sits in that dip
        at_ref = moment_bound(REF, ctx).bound
        assert at_ref < moment_bound(
            MomentParams(sigma0="0.6472", H=10 ** 3), ctx).bound
        assert at_ref < moment_bound(
            MomentParams(sigma0="0.6472", H=10 ** 7), ctx).bound

    def test_breakdown_identities_exact(self, ctx):
        mb = moment_bound(REF, ctx)
        bd = mb.breakdown
        with ctx.workdps():
            assert bd.E1_total == bd.eps1 + bd.eps2 + bd.eps3
            lhs = bd.eps3 ** 2
            rhs = 4 * bd.eps2 * (mb.zeta_2sigma0 + bd.eps1)
            assert abs(lhs - rhs) < mp.mpf(10) ** -(ctx.digits + 5)

    def test_log_moment_form(self, ctx):
        with ctx.workdps():
            T = mp.mpf(10) ** 11
            v = log_moment_integral_bound(REF, T, ctx)
            want = (T - 483393) / 2 * mp.log(moment_bound(REF, ctx).bound)
            assert abs(v - want) < mp.mpf(10) ** -40


class TestSubterms:
    def test_e14_positive_decreasing(self, ctx):
        prev = None
        for T in (3.061e10, 6e10, 1e11, 3e11):
            e14 = e1_subterms("0.70", T, ctx)[3]
            assert e14 > 0
            if prev is not None:
                assert e14 < prev
            prev = e14

    def test_sign_change_location(self, ctx):
        root = e12_sign_change(ctx)
        with ctx.workdps():
            assert abs(root - mp.mpf("0.679785")) < 1e-5

    def test_e12_sign_by_side(self, ctx):
        assert e12_numerator("0.679775", ctx) < 0
        assert e12_numerator("0.679796", ctx) > 0

    @pytest.mark.parametrize("s0", ["0.53", "0.70", "0.9723"])
    def test_e11_e13_decreasing_above_H_rh(self, ctx, s0):
        with ctx.workdps():
            H0 = mp.mpf("3.061e10")
            ts = [H0 * mp.power(10, mp.mpf(i) / 19) for i in range(20)]
            rows = [e1_subterms(s0, t, ctx) for t in ts]
            e11 = [r[0] for r in rows]
            e13 = [r[2] for r in rows]
            assert all(a > b for a, b in zip(e11, e11[1:]))
            assert all(a > b for a, b in zip(e13, e13[1:]))

    def test_endpoint_sigma0_accepted(self, ctx):
        e1_subterms("0.9723", 3.061e10, ctx)

    def test_T_floor(self, ctx):
        with pytest.raises(DomainError):
            e1_subterms("0.70", 1.5, ctx)


class TestNumericSecondMoment:
    def test_hovers_near_zeta_at_desk_heights(self, ctx):
        v = numeric_second_moment("0.75", 10 ** 3, 2 * 10 ** 3, ctx)
        with ctx.workdps():
            z = float(mp.zeta(mp.mpf("1.5")))
        assert abs(v - z) < 0.15 * z

    def test_degenerate_interval_rejected(self, ctx):
        with pytest.raises(DomainError):
            numeric_second_moment("0.75", 10 ** 3, 10 ** 3, ctx)

    def test_desk_ceiling(self, ctx):
        with pytest.raises(UnsupportedHeightError):
            numeric_second_moment("0.75", 10 ** 3, 2 * 10 ** 5, ctx)

    def test_halving_step_stays_within_tolerance(self, ctx):
        # rerunning at a tighter tolerance forces at least one further
        # halving; the value must move by less than the coarse tolerance
        a = numeric_second_moment("0.65", 1000.0, 3000.0, ctx)
        b = numeric_second_moment("0.65", 1000.0, 3000.0, ctx, rel_tol=1e-8)
        assert abs(a - b) <= 1e-6 * abs(b)
