"""One-dimensional profile machinery behind the deformation family.

The family of plane curves in the moment simplex is assembled from three
scalar building blocks:

* ``linear_ramp`` -- the straight ramp rising from 0 at u = -1 to 1 at u = 1;
* ``gated_ramp`` -- a smoothed variant that vanishes identically on [-1, 0],
  is strictly increasing on (0, 1], and agrees with the linear ramp on
  [1/2, 1];
* ``s_of_u`` -- an odd, strictly increasing reparametrization of [-1, 1]
  onto [-delta, delta] whose derivatives of every order vanish at the
  endpoints (so curve endpoints glue smoothly onto the degenerate fibers).

Blending the two ramps affinely in the deformation parameter t and composing
with the inverse reparametrization produces ``curve_point``.  The sign of the
curve's areal velocity x'y - xy' is what separates the contact, integrable
and overtwisted regimes downstream, so everything here keeps derivatives
available in closed form.

All functions are pure scalar maps; callers drive grid sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

T_MAX = 1.5

U_TOL = 1e-12


class DomainError(ValueError):
    """An argument fell outside the documented domain of an operation."""


@dataclass(frozen=True)
class SmoothStepParams:
    """Edges of a C-infinity step transition: 0 for x <= lo, 1 for x >= hi."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"smooth step needs lo < hi, got ({self.lo}, {self.hi})")


@dataclass(frozen=True)
class ProfileFamily:
    """Parameters of the profile curve family.

    delta is the half-width of the wall coordinate interval [-delta, delta];
    any 0 < delta << 1 works, 0.3 is the default.  The two step parameter
    pairs fix the concrete smoothed ramp and reparametrization; the defaults
    are the ones all documented identities assume.
    """

    delta: float = 0.3
    phi1_step: SmoothStepParams = SmoothStepParams(0.0, 0.5)
    su_step: SmoothStepParams = SmoothStepParams(0.0, 1.0)

    def __post_init__(self):
        if not 0.0 < self.delta < 1.0:
            raise DomainError(f"delta must lie in (0, 1), got {self.delta}")


@dataclass(frozen=True)
class CurveSample:
    """A point of the plane curve at deformation parameter t, with s-derivatives."""

    t: float
    s: float
    x: float
    y: float
    dx: float
    dy: float


def _flat_exp(x: float) -> float:
    """exp(-1/x) for x > 0, extended by 0 for x <= 0 (C-infinity at 0)."""
    if x <= 0.0:
        return 0.0
    return math.exp(-1.0 / x)


def smooth_step(p: SmoothStepParams, x: float) -> float:
    """Symmetric C-infinity step: 0 on (-inf, lo], 1 on [hi, inf).

    Uses the standard flat-at-endpoints transition
    e(tau) / (e(tau) + e(1 - tau)) with e(tau) = exp(-1/tau), which satisfies
    smooth_step(x) + smooth_step(lo + hi - x) = 1 up to rounding.
    """
    tau = (x - p.lo) / (p.hi - p.lo)
    if tau <= 0.0:
        return 0.0
    if tau >= 1.0:
        return 1.0
    g0 = _flat_exp(tau)
    g1 = _flat_exp(1.0 - tau)
    return g0 / (g0 + g1)


def smooth_step_deriv(p: SmoothStepParams, x: float) -> float:
    """Derivative of :func:`smooth_step` with respect to x (0 outside (lo, hi))."""
    tau = (x - p.lo) / (p.hi - p.lo)
    if tau <= 0.0 or tau >= 1.0:
        return 0.0
    g0 = _flat_exp(tau)
    g1 = _flat_exp(1.0 - tau)
    gp0 = g0 / (tau * tau)
    gp1 = g1 / ((1.0 - tau) * (1.0 - tau))
    return (gp0 * g1 + g0 * gp1) / ((g0 + g1) ** 2 * (p.hi - p.lo))


def _check_u(u: float) -> float:
    if u < -1.0 - U_TOL or u > 1.0 + U_TOL:
        raise DomainError(f"u must lie in [-1, 1], got {u}")
    return min(1.0, max(-1.0, u))


def _check_t(t: float) -> float:
    if t < 0.0 or t >= T_MAX:
        raise DomainError(f"t must lie in [0, {T_MAX}), got {t}")
    return t


def linear_ramp(u: float) -> float:
    """The straight profile (1 + u) / 2 on [-1, 1]."""
    u = _check_u(u)
    return 0.5 * (1.0 + u)


def gated_ramp(fam: ProfileFamily, u: float) -> float:
    """Smoothed ramp: 0 on [-1, 0], strictly increasing on (0, 1], equal to
    the linear ramp on [1/2, 1]."""
    u = _check_u(u)
    return linear_ramp(u) * smooth_step(fam.phi1_step, u)


def gated_ramp_deriv(fam: ProfileFamily, u: float) -> float:
    """u-derivative of :func:`gated_ramp`."""
    u = _check_u(u)
    return 0.5 * smooth_step(fam.phi1_step, u) + linear_ramp(u) * smooth_step_deriv(
        fam.phi1_step, u
    )


def blended_ramp(fam: ProfileFamily, t: float, u: float) -> float:
    """Affine blend (1 - t) * linear_ramp + t * gated_ramp (extrapolates past t = 1)."""
    t = _check_t(t)
    u = _check_u(u)
    return (1.0 - t) * linear_ramp(u) + t * gated_ramp(fam, u)


def blended_ramp_deriv(fam: ProfileFamily, t: float, u: float) -> float:
    """u-derivative of :func:`blended_ramp`."""
    t = _check_t(t)
    u = _check_u(u)
    return (1.0 - t) * 0.5 + t * gated_ramp_deriv(fam, u)


def s_of_u(fam: ProfileFamily, u: float) -> float:
    """Odd reparametrization of [-1, 1] onto [-delta, delta].

    Built as delta * (2 * step((u + 1) / 2) - 1) with the symmetric standard
    step, so oddness and C-infinity flatness at u = +-1 hold exactly.
    """
    u = _check_u(u)
    return fam.delta * (2.0 * smooth_step(fam.su_step, 0.5 * (u + 1.0)) - 1.0)


def ds_du(fam: ProfileFamily, u: float) -> float:
    """u-derivative of :func:`s_of_u` (even, strictly positive on (-1, 1))."""
    u = _check_u(u)
    return fam.delta * smooth_step_deriv(fam.su_step, 0.5 * (u + 1.0))


def u_of_s(fam: ProfileFamily, s: float, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Monotone inverse of :func:`s_of_u` on [-delta, delta].

    Bracketing bisection refined by safeguarded Newton steps.  Newton alone
    is unsafe near the endpoints where the derivative of s(u) vanishes, so
    any step leaving the bracket falls back to bisection.  Absolute
    tolerance ``tol`` in u; the endpoints map exactly to +-1.
    """
    d = fam.delta
    if abs(s) > d * (1.0 + 1e-12) + 1e-15:
        raise DomainError(f"s must lie in [-{d}, {d}], got {s}")
    if s >= d:
        return 1.0
    if s <= -d:
        return -1.0
    lo, hi = -1.0, 1.0
    u = 0.0
    f = s_of_u(fam, u) - s
    for _ in range(max_iter):
        if f == 0.0:
            return u
        if f > 0.0:
            hi = u
        else:
            lo = u
        if hi - lo <= tol:
            return 0.5 * (lo + hi)
        du = ds_du(fam, u)
        u_next = u - f / du if du > 0.0 else math.nan
        if not lo < u_next < hi:
            u_next = 0.5 * (lo + hi)
        if abs(u_next - u) <= tol:
            return u_next
        u = u_next
        f = s_of_u(fam, u) - s
    return u


@lru_cache(maxsize=200_000)
def _curve_data(fam: ProfileFamily, t: float, s: float):
    u = u_of_s(fam, s)
    x = blended_ramp(fam, t, u)
    y = blended_ramp(fam, t, -u)
    if abs(u) >= 1.0:
        # Endpoint convention: the chain rule is an indeterminate limit at
        # s = +-delta (u'(s) diverges there); samples carry 0.
        dx = dy = 0.0
    else:
        sp = ds_du(fam, u)  # even in u, so it serves both +-u
        if sp == 0.0:
            dx = dy = 0.0
        else:
            dx = blended_ramp_deriv(fam, t, u) / sp
            dy = -blended_ramp_deriv(fam, t, -u) / sp
    return u, x, y, dx, dy


def curve_point(fam: ProfileFamily, t: float, s: float) -> CurveSample:
    """Sample of the plane curve at (t, s): position and s-derivatives.

    x(s) and y(s) are the blended ramp evaluated at u(s) and u(-s); by
    oddness of s(u) the two pre-images are +-u(s) and share the same
    reparametrization speed.
    """
    t = _check_t(t)
    u, x, y, dx, dy = _curve_data(fam, t, s)
    return CurveSample(t=t, s=s, x=x, y=y, dx=dx, dy=dy)


def areal_velocity(fam: ProfileFamily, t: float, s: float) -> float:
    """x'(s) y(s) - x(s) y'(s) of the curve; its sign matches sign(1 - t)
    at every interior s and vanishes identically at t = 1."""
    c = curve_point(fam, t, s)
    return c.dx * c.y - c.x * c.dy
