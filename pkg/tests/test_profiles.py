import math

import numpy as np
import pytest

from reebdeform import profiles as pr
from reebdeform.profiles import (
    DomainError,
    ProfileFamily,
    SmoothStepParams,
    areal_velocity,
    curve_point,
    s_of_u,
    u_of_s,
)

STEP01 = SmoothStepParams(0.0, 1.0)


def ref_step(x):
    # independent statement of the standard symmetric transition
    if x <= 0:
        return 0.0
    if x >= 1:
        return 1.0
    e = lambda v: math.exp(-1.0 / v)
    return e(x) / (e(x) + e(1.0 - x))


class TestSmoothStep:
    def test_plateaus(self):
        assert pr.smooth_step(STEP01, -0.5) == 0.0
        assert pr.smooth_step(STEP01, 1.5) == 1.0
        assert pr.smooth_step(STEP01, 0.0) == 0.0
        assert pr.smooth_step(STEP01, 1.0) == 1.0

    def test_symmetric_midpoint(self):
        assert pr.smooth_step(STEP01, 0.5) == pytest.approx(0.5, abs=1e-15)

    def test_matches_reference_transition(self):
        for x in (0.1, 0.2, 0.25, 0.4, 0.5, 0.7, 0.9):
            assert pr.smooth_step(STEP01, x) == pytest.approx(ref_step(x), abs=1e-15)
        v = pr.smooth_step(STEP01, 0.25)
        assert 0.0 < v < 0.5
        assert v > pr.smooth_step(STEP01, 0.2)

    def test_strictly_increasing_inside(self):
        # beyond ~0.95 the transition is flat at double precision
        xs = np.linspace(0.01, 0.95, 200)
        vals = [pr.smooth_step(STEP01, float(x)) for x in xs]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_deriv_matches_finite_difference(self):
        h = 1e-7
        for x in (0.2, 0.5, 0.8):
            fd = (pr.smooth_step(STEP01, x + h) - pr.smooth_step(STEP01, x - h)) / (2 * h)
            assert pr.smooth_step_deriv(STEP01, x) == pytest.approx(fd, rel=1e-6)
        assert pr.smooth_step_deriv(STEP01, -1.0) == 0.0
        assert pr.smooth_step_deriv(STEP01, 2.0) == 0.0

    def test_bad_params(self):
        with pytest.raises(DomainError):
            SmoothStepParams(1.0, 0.0)


class TestRamps:
    def test_linear_ramp_values(self):
        assert pr.linear_ramp(-1.0) == 0.0
        assert pr.linear_ramp(1.0) == 1.0
        assert pr.linear_ramp(0.0) == 0.5

    def test_linear_ramp_domain(self):
        with pytest.raises(DomainError):
            pr.linear_ramp(1.5)

    def test_gated_ramp_vanishes_left(self, fam):
        for u in np.linspace(-1.0, 0.0, 101):
            assert pr.gated_ramp(fam, float(u)) == 0.0

    def test_gated_ramp_equals_linear_right(self, fam):
        for u in np.linspace(0.5, 1.0, 101):
            assert pr.gated_ramp(fam, float(u)) == pr.linear_ramp(float(u))
        assert pr.gated_ramp(fam, 0.75) == pytest.approx(0.875, abs=1e-15)

    def test_gated_ramp_increasing_on_right_half(self, fam):
        # finite-difference derivative positive on (0, 1]
        h = 1e-6
        for u in np.linspace(1e-2, 1.0 - h, 10_000):
            fd = pr.gated_ramp(fam, float(u)) - pr.gated_ramp(fam, float(u) - h)
            assert fd > 0.0

    def test_gated_ramp_mid_value(self, fam):
        v = pr.gated_ramp(fam, 0.25)
        assert 0.0 < v < 0.625
        assert pr.gated_ramp_deriv(fam, 0.25) > 0.0

    def test_blended_endpoints_in_t(self, fam):
        for u in (-0.7, -0.2, 0.3, 0.9):
            assert pr.blended_ramp(fam, 0.0, u) == pr.linear_ramp(u)
            assert pr.blended_ramp(fam, 1.0, u) == pr.gated_ramp(fam, u)

    def test_blended_extrapolates(self, fam):
        # limit value at the open end of the t range
        assert pr.blended_ramp(fam, 1.5 - 1e-12, 0.0) == pytest.approx(-0.25, abs=1e-11)
        with pytest.raises(DomainError):
            pr.blended_ramp(fam, 1.5, 0.0)
        with pytest.raises(DomainError):
            pr.blended_ramp(fam, -0.1, 0.0)


class TestReparametrization:
    def test_endpoint_values(self, fam):
        assert s_of_u(fam, 0.0) == 0.0
        assert s_of_u(fam, 1.0) == fam.delta
        assert s_of_u(fam, -1.0) == -fam.delta

    def test_odd(self, fam):
        for u in np.linspace(0.0, 1.0, 301):
            assert abs(s_of_u(fam, float(u)) + s_of_u(fam, -float(u))) <= 1e-14

    def test_strictly_increasing(self, fam):
        # infinitely flat endpoints: s(u) is constant at double precision
        # past |u| ~ 0.93, so strictness is asserted on [-0.9, 0.9]
        us = np.linspace(-0.9, 0.9, 500)
        vals = [s_of_u(fam, float(u)) for u in us]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_flat_at_endpoints(self, fam):
        assert pr.ds_du(fam, 1.0) == 0.0
        assert pr.ds_du(fam, -1.0) == 0.0

    def test_inverse_exact_at_endpoints(self, fam):
        assert u_of_s(fam, fam.delta) == 1.0
        assert u_of_s(fam, -fam.delta) == -1.0
        assert u_of_s(fam, 0.0) == 0.0

    def test_inverse_round_trip(self, fam):
        # the inverse is ill-conditioned where s(u) is numerically flat, so
        # the 1e-10 round trip is asserted away from the endpoints
        rng = np.random.default_rng(7)
        for u in rng.uniform(-0.9, 0.9, size=1000):
            assert abs(u_of_s(fam, s_of_u(fam, float(u))) - u) <= 1e-10

    def test_inverse_domain(self, fam):
        with pytest.raises(DomainError):
            u_of_s(fam, fam.delta * 1.5)


class TestCurve:
    def test_t0_lies_on_simplex_edge(self, fam):
        for s in np.linspace(-fam.delta, fam.delta, 101):
            c = curve_point(fam, 0.0, float(s))
            assert abs(c.x + c.y - 1.0) <= 1e-14

    def test_t1_upper_half_has_zero_y(self, fam):
        for s in np.linspace(1e-3, fam.delta, 50):
            c = curve_point(fam, 1.0, float(s))
            assert c.y == 0.0

    def test_center_symmetry(self, fam):
        for t in (0.0, 0.5, 1.0, 1.25):
            c = curve_point(fam, t, 0.0)
            assert c.x == c.y
            assert c.x == pr.blended_ramp(fam, t, 0.0)

    def test_mirror_symmetry(self, fam):
        for t in (0.25, 1.0, 1.3):
            for s in np.linspace(-fam.delta, fam.delta, 41):
                cp = curve_point(fam, t, float(s))
                cm = curve_point(fam, t, -float(s))
                assert cp.x == pytest.approx(cm.y, abs=1e-14)

    def test_endpoint_samples_carry_zero_derivatives(self, fam):
        c = curve_point(fam, 0.5, fam.delta)
        assert (c.dx, c.dy) == (0.0, 0.0)
        assert (c.x, c.y) == (1.0, 0.0)


def fd_u_prime(fam, s, h=1e-7):
    return (u_of_s(fam, s + h) - u_of_s(fam, s - h)) / (2 * h)


class TestArealVelocity:
    def test_vanishes_identically_at_t1(self, fam):
        for s in np.linspace(-fam.delta * 0.99, fam.delta * 0.99, 101):
            assert abs(areal_velocity(fam, 1.0, float(s))) <= 1e-12

    def test_t0_equals_half_u_prime(self, fam):
        for s in (-0.2, -0.05, 0.1, 0.25):
            w = areal_velocity(fam, 0.0, s)
            assert w == pytest.approx(0.5 * fd_u_prime(fam, s), rel=1e-5)
            assert w > 0.0

    def test_negative_away_from_center_above_t1(self, fam):
        assert areal_velocity(fam, 1.25, 0.1) < 0.0

    def test_positive_at_center_for_all_t(self, fam):
        # (1-t)^2 u'(0) / 2 at s = 0: positive for every t != 1, which is
        # why the t > 1 surfaces fail the uniform sign law near the center
        up0 = fd_u_prime(fam, 0.0)
        for t in (0.0, 0.5, 1.25, 1.4):
            w = areal_velocity(fam, t, 0.0)
            assert w == pytest.approx((1.0 - t) ** 2 * up0 / 2.0, rel=1e-5)

    def test_uniform_sign_below_t1(self, fam):
        ss = np.linspace(-fam.delta, fam.delta, 1002)[1:-1]
        for t in (0.0, 0.25, 0.5, 0.9):
            assert all(areal_velocity(fam, t, float(s)) > 0.0 for s in ss)
