"""The integrable surface: leaf integration, surfaces of revolution,
Legendrian certification, the compact torus leaf, and spiral holonomy.

At t = 1 the restricted form on the half {s > 0} reads

    phi dth1 + ((1 - phi) / 3) ds,        phi = gated_ramp(u(s)),

so a leaf of its kernel is the th2-revolution surface of a graph th1(s)
with slope (phi - 1) / (3 phi).  The slope diverges as s -> 0+ where phi
vanishes to infinite order; leaves are non-compact and spiral onto the
central torus, so integration is truncated at a pole guard on phi.  The
half {s < 0} is the mirror image with the roles of th1 and th2 swapped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad, solve_ivp
from scipy.optimize import brentq

from .ambient import AmbientPoint, alpha_eval, embed_chart
from .ambient import _fd_tangent  # shared finite-difference tangent helper
from .profiles import DomainError, ProfileFamily, gated_ramp, u_of_s

EPS_POLE = 1e-8
ODE_RTOL = 1e-10
ODE_ATOL = 1e-12

S_POSITIVE = "s_positive"
S_NEGATIVE = "s_negative"

_SQRT3_INV = 1.0 / math.sqrt(3.0)


class PoleError(RuntimeError):
    """The ramp value fell below the pole guard: leaf integration must stop."""


@dataclass
class LeafCurve:
    """Integrated leaf graph on one solid-torus component.

    ``samples`` is an ordered list of (s, theta) with s strictly monotone
    and theta unwrapped; on the s_negative component s is negative and
    theta is the th2 angle of the mirrored construction.
    """

    component: str
    samples: list
    s_min_reached: float
    theta_start: float
    hit_pole: bool
    truncated: bool
    _interp: object = None  # dense ODE solution on |s|

    def theta_at(self, s: float) -> float:
        """Unwrapped graph angle at |s| via the dense ODE solution.

        On the s_negative component the kernel winds the opposite way in
        |s| (the ds coefficient is even in s while the graph angle swaps),
        so the angle is reflected through the start value.
        """
        th = float(self._interp(abs(s))[0])
        if self.component == S_NEGATIVE:
            return 2.0 * self.theta_start - th
        return th


@dataclass
class LeafSurface:
    """Surface of revolution of a leaf graph, sampled on an (s, angle) grid."""

    base: LeafCurve
    s_rows: np.ndarray
    rev_angles: np.ndarray
    mesh: list  # mesh[i_s][i_rev] -> AmbientPoint


@dataclass(frozen=True)
class HolonomyReport:
    bound: float
    s_at_bound: float | None
    monotone: bool
    achieved_winding: float
    s_min_reached: float

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "s_at_bound": self.s_at_bound,
            "monotone": self.monotone,
            "achieved_winding": self.achieved_winding,
            "s_min_reached": self.s_min_reached,
        }


def leaf_slope(fam: ProfileFamily, s: float, pole_guard: float = EPS_POLE) -> float:
    """Graph slope d(theta)/ds = (phi - 1) / (3 phi) on the s > 0 component."""
    if not 0.0 < s <= fam.delta:
        raise DomainError(f"s must lie in (0, delta], got {s}")
    phi = gated_ramp(fam, u_of_s(fam, s))
    if phi < pole_guard:
        raise PoleError(f"ramp value {phi} below pole guard at s = {s}")
    return (phi - 1.0) / (3.0 * phi)


def integrate_leaf(
    fam: ProfileFamily,
    component: str = S_POSITIVE,
    theta_start: float = 0.0,
    s_stop_guard: float = 1e-12,
    pole_guard: float = EPS_POLE,
    rtol: float = ODE_RTOL,
    atol: float = ODE_ATOL,
) -> LeafCurve:
    """Adaptive Runge-Kutta integration of the leaf graph from s = delta
    down toward 0, stopping at the pole guard or at ``s_stop_guard``.

    The s_negative component is integrated through the mirror symmetry
    (s -> -s with the two angles swapped); its samples carry negative s.
    """
    if component not in (S_POSITIVE, S_NEGATIVE):
        raise DomainError(f"unknown component {component!r}")
    if s_stop_guard <= 0.0:
        raise DomainError("s_stop_guard must be > 0")
    d = fam.delta

    def rhs(s, _theta):
        phi = max(gated_ramp(fam, u_of_s(fam, s)), 1e-300)
        return [(phi - 1.0) / (3.0 * phi)]

    def pole_event(s, _theta):
        return gated_ramp(fam, u_of_s(fam, s)) - pole_guard

    pole_event.terminal = True

    sol = solve_ivp(
        rhs,
        (d, s_stop_guard),
        [theta_start],
        method="DOP853",
        events=pole_event,
        dense_output=True,
        rtol=rtol,
        atol=atol,
    )
    hit_pole = bool(sol.t_events[0].size)
    truncated = sol.status == -1
    s_min = float(sol.t[-1])
    sign = 1.0 if component == S_POSITIVE else -1.0
    if component == S_POSITIVE:
        samples = [(float(s), float(th)) for s, th in zip(sol.t, sol.y[0])]
    else:
        samples = [
            (-float(s), 2.0 * theta_start - float(th))
            for s, th in zip(sol.t, sol.y[0])
        ]
    return LeafCurve(
        component=component,
        samples=samples,
        s_min_reached=sign * s_min,
        theta_start=theta_start,
        hit_pole=hit_pole,
        truncated=truncated,
        _interp=sol.sol,
    )


def ramp_level_s(fam: ProfileFamily, level: float) -> float:
    """The s in (0, delta) at which the gated ramp through u(s) equals
    ``level`` (bracketed root; the ramp is increasing in s)."""
    if not 0.0 < level < 1.0:
        raise DomainError(f"level must lie in (0, 1), got {level}")
    f = lambda s: gated_ramp(fam, u_of_s(fam, s)) - level
    return float(brentq(f, fam.delta * 1e-9, fam.delta * (1.0 - 1e-12), xtol=1e-15))


def leaf_surface(
    fam: ProfileFamily,
    leaf: LeafCurve,
    n_theta2: int,
    n_s: int | None = None,
    phi_floor: float = 1e-3,
) -> LeafSurface:
    """Surface of revolution of a leaf graph.

    Rows run from the ramp level ``phi_floor`` up to s = delta; the floor
    keeps finite-difference tangents accurate on the meshed portion (the
    full leaf spirals forever, any compact piece is a valid sample).  On
    the s_positive component the revolution angle is th2, on s_negative it
    is th1.
    """
    if n_theta2 < 2:
        raise DomainError("n_theta2 must be >= 2")
    n_s = n_s or n_theta2
    s_lo = max(ramp_level_s(fam, phi_floor), abs(leaf.s_min_reached))
    s_rows = np.linspace(s_lo, fam.delta, n_s)
    rev = np.linspace(0.0, 2.0 * math.pi, n_theta2, endpoint=False)
    sign = 1.0 if leaf.component == S_POSITIVE else -1.0
    mesh = []
    for s in s_rows:
        th_leaf = leaf.theta_at(float(s))
        row = []
        for a in rev:
            if leaf.component == S_POSITIVE:
                row.append(embed_chart(fam, 1.0, th_leaf, float(a), float(s)))
            else:
                row.append(embed_chart(fam, 1.0, float(a), th_leaf, sign * float(s)))
        mesh.append(row)
    return LeafSurface(base=leaf, s_rows=s_rows, rev_angles=rev, mesh=mesh)


def legendrian_residual(
    fam: ProfileFamily, surf: LeafSurface, fd_step: float = 1e-5
) -> float:
    """Max |alpha(tangent)| over the surface mesh for the two
    finite-difference tangent directions (along-leaf and revolution).

    The along-leaf difference needs s +- fd_step inside the leaf's domain,
    so it skips the boundary rows where the chart degenerates; the
    revolution tangent is evaluated everywhere.
    """
    leaf = surf.base
    positive = leaf.component == S_POSITIVE
    d = fam.delta
    s_min = abs(leaf.s_min_reached)
    worst = 0.0
    for s, row in zip(surf.s_rows, surf.mesh):
        s = float(s)
        th_leaf = leaf.theta_at(s)
        along_ok = s_min + fd_step <= s <= d - fd_step
        for a, p in zip(surf.rev_angles, row):
            a = float(a)
            if positive:
                rev_map = lambda q: embed_chart(fam, 1.0, th_leaf, q, s)
                along_map = lambda q: embed_chart(fam, 1.0, leaf.theta_at(q), a, q)
            else:
                rev_map = lambda q: embed_chart(fam, 1.0, q, th_leaf, -s)
                along_map = lambda q: embed_chart(fam, 1.0, a, leaf.theta_at(q), -q)
            worst = max(worst, abs(alpha_eval(p, _fd_tangent(rev_map, a, fd_step))))
            if along_ok:
                worst = max(
                    worst, abs(alpha_eval(p, _fd_tangent(along_map, s, fd_step)))
                )
    return worst


def torus_leaf(n1: int, n2: int) -> list:
    """The compact torus leaf: all radii 1/sqrt(3), th3 = -th1 - th2.
    Returns mesh[i][j] -> AmbientPoint over an (th1, th2) grid."""
    if min(n1, n2) < 2:
        raise DomainError("torus resolutions must be >= 2")
    th1s = np.linspace(0.0, 2.0 * math.pi, n1, endpoint=False)
    th2s = np.linspace(0.0, 2.0 * math.pi, n2, endpoint=False)
    return [
        [
            AmbientPoint(
                r1=_SQRT3_INV,
                r2=_SQRT3_INV,
                r3=_SQRT3_INV,
                th1=float(a),
                th2=float(b),
                th3=-float(a) - float(b),
            )
            for b in th2s
        ]
        for a in th1s
    ]


def torus_residual(n1: int = 16, n2: int = 16, fd_step: float = 1e-5) -> float:
    """Max |alpha(tangent)| over the torus leaf's coordinate tangents."""

    def param(a, b):
        return AmbientPoint(
            r1=_SQRT3_INV, r2=_SQRT3_INV, r3=_SQRT3_INV, th1=a, th2=b, th3=-a - b
        )

    worst = 0.0
    for a in np.linspace(0.0, 2.0 * math.pi, n1, endpoint=False):
        for b in np.linspace(0.0, 2.0 * math.pi, n2, endpoint=False):
            p = param(float(a), float(b))
            v1 = _fd_tangent(lambda q: param(q, float(b)), float(a), fd_step)
            v2 = _fd_tangent(lambda q: param(float(a), q), float(b), fd_step)
            worst = max(worst, abs(alpha_eval(p, v1)), abs(alpha_eval(p, v2)))
    return worst


def control_surface_min_residual(
    fam: ProfileFamily,
    th1_const: float = 0.0,
    n: int = 16,
    fd_step: float = 1e-5,
    phi_floor: float = 1e-3,
) -> float:
    """Min over sample points of the max tangent residual for the NON-leaf
    surface {th1 = const} in the integrable surface; bounded away from zero
    (the s-tangent pairs with the ds coefficient of the form)."""
    s_lo = ramp_level_s(fam, phi_floor)
    s_hi = 0.5 * fam.delta
    best = math.inf
    for s in np.linspace(s_lo, s_hi, n):
        for a in np.linspace(0.0, 2.0 * math.pi, n, endpoint=False):
            p = embed_chart(fam, 1.0, th1_const, float(a), float(s))
            vs = _fd_tangent(
                lambda q: embed_chart(fam, 1.0, th1_const, float(a), q), float(s), fd_step
            )
            v2 = _fd_tangent(
                lambda q: embed_chart(fam, 1.0, th1_const, q, float(s)), float(a), fd_step
            )
            best = min(best, max(abs(alpha_eval(p, vs)), abs(alpha_eval(p, v2))))
    return best


def leaf_quadrature_theta(
    fam: ProfileFamily, s: float, theta_start: float = 0.0
) -> float:
    """Independent quadrature oracle for the leaf graph: theta(s) obtained
    by adaptive quadrature of the slope from delta down to s."""
    val, _err = quad(
        lambda q: leaf_slope(fam, q),
        fam.delta,
        s,
        epsabs=1e-13,
        epsrel=1e-13,
        limit=200,
    )
    return theta_start + val


def spiral_divergence(
    fam: ProfileFamily,
    bound: float,
    pole_guard: float = EPS_POLE,
    n_guards: int = 24,
) -> HolonomyReport:
    """Numeric witness of the unbounded spiral holonomy.

    Integrates the leaf down to the pole guard, checks that the winding
    grows monotonically as the stopping guard shrinks, and locates the s at
    which the requested winding bound is first reached.
    """
    if bound <= 0.0:
        raise DomainError("bound must be > 0")
    leaf = integrate_leaf(fam, pole_guard=pole_guard)
    s_min = abs(leaf.s_min_reached)
    th0 = leaf.theta_start

    def winding(s):
        return abs(leaf.theta_at(s) - th0)

    guards = np.geomspace(0.5 * fam.delta, s_min, n_guards)
    w = [winding(float(g)) for g in guards]
    monotone = all(w2 >= w1 for w1, w2 in zip(w, w[1:]))
    achieved = winding(s_min)
    if achieved >= bound:
        s_at = float(brentq(lambda s: winding(s) - bound, s_min, fam.delta))
    else:
        s_at = None
    return HolonomyReport(
        bound=bound,
        s_at_bound=s_at,
        monotone=monotone,
        achieved_winding=achieved,
        s_min_reached=s_min,
    )
