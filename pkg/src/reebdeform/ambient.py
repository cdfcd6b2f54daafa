"""Ambient five-sphere geometry: simplex projection, contact form, charts.

Points of the unit sphere in C^3 are stored in action-angle coordinates
(r1, r2, r3, th1, th2, th3) with r1^2 + r2^2 + r3^2 = 1.  The moment
projection sends a point to the 2-simplex; we use barycenter-offset
coordinates (x, y) on the simplex, fixed by

    3 r1^2 = 1 + 2x - y,   3 r2^2 = 1 - x + 2y,   3 r3^2 = 1 - x - y.

The standard contact form is alpha = r1^2 dth1 + r2^2 dth2 + r3^2 dth3.

The deformation surfaces are charted by (th1, th2, s), with th3 = s - th1
- th2 and radii determined by the profile curve at s.  Restricting alpha
to such a chart gives a 1-form a dth1 + b dth2 + c ds whose coefficients
depend only on s:

    a = x(s),  b = y(s),  c = (1 - x(s) - y(s)) / 3.

(The c coefficient is r3^2; eliminating dth3 = ds - dth1 - dth2 leaves
a = r1^2 - r3^2 = x and b = r2^2 - r3^2 = y.)  ``numeric_pullback`` is an
independent finite-difference oracle for the same coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .profiles import DomainError, ProfileFamily, curve_point

SIMPLEX_TOL = 1e-12
NORM_TOL = 1e-9


@dataclass(frozen=True)
class AmbientPoint:
    """Point of the unit sphere in C^3 in action-angle coordinates.

    Angles are stored unwrapped on the real line; compare mod 2*pi at
    export time only.  Angles attached to a vanishing radius are dummies.
    """

    r1: float
    r2: float
    r3: float
    th1: float
    th2: float
    th3: float

    def norm_sq(self) -> float:
        return self.r1 ** 2 + self.r2 ** 2 + self.r3 ** 2

    def cartesian(self):
        """The six real coordinates (Re z1, Im z1, Re z2, Im z2, Re z3, Im z3)."""
        return (
            self.r1 * math.cos(self.th1),
            self.r1 * math.sin(self.th1),
            self.r2 * math.cos(self.th2),
            self.r2 * math.sin(self.th2),
            self.r3 * math.cos(self.th3),
            self.r3 * math.sin(self.th3),
        )


@dataclass(frozen=True)
class SimplexPoint:
    """Barycenter-offset coordinates (x, y) on the moment simplex."""

    x: float
    y: float


@dataclass(frozen=True)
class AmbientTangent:
    """Tangent components in the (r, theta) frame at some ambient point."""

    dr1: float = 0.0
    dr2: float = 0.0
    dr3: float = 0.0
    dth1: float = 0.0
    dth2: float = 0.0
    dth3: float = 0.0


@dataclass(frozen=True)
class ChartOneForm:
    """Coefficients (a, b, c) of a dth1 + b dth2 + c ds on a (th1, th2, s)
    chart, together with their s-derivatives.  All coefficients here depend
    on s only."""

    a: float
    b: float
    c: float
    da: float
    db: float
    dc: float


def simplex_to_radii(p: SimplexPoint) -> tuple[float, float, float]:
    """Nonnegative radii of the torus fiber over a simplex point."""
    e1 = 1.0 + 2.0 * p.x - p.y
    e2 = 1.0 - p.x + 2.0 * p.y
    e3 = 1.0 - p.x - p.y
    for e in (e1, e2, e3):
        if e < -SIMPLEX_TOL:
            raise DomainError(f"point ({p.x}, {p.y}) outside the simplex: {e}")
    return (
        math.sqrt(max(e1, 0.0) / 3.0),
        math.sqrt(max(e2, 0.0) / 3.0),
        math.sqrt(max(e3, 0.0) / 3.0),
    )


def radii_to_simplex(r1: float, r2: float, r3: float) -> SimplexPoint:
    """Inverse of :func:`simplex_to_radii`: x = r1^2 - r3^2, y = r2^2 - r3^2."""
    n = r1 * r1 + r2 * r2 + r3 * r3
    if abs(n - 1.0) > NORM_TOL:
        raise DomainError(f"radii not normalized: sum of squares {n}")
    return SimplexPoint(x=r1 * r1 - r3 * r3, y=r2 * r2 - r3 * r3)


def alpha_eval(p: AmbientPoint, v: AmbientTangent) -> float:
    """The standard contact form r1^2 dth1 + r2^2 dth2 + r3^2 dth3 on v."""
    return p.r1 ** 2 * v.dth1 + p.r2 ** 2 * v.dth2 + p.r3 ** 2 * v.dth3


def embed_chart(
    fam: ProfileFamily, t: float, th1: float, th2: float, s: float
) -> AmbientPoint:
    """Chart embedding: radii from the profile curve at s, angles
    (th1, th2, s - th1 - th2) so the wall constraint th1+th2+th3 = s holds."""
    c = curve_point(fam, t, s)
    r1, r2, r3 = simplex_to_radii(SimplexPoint(c.x, c.y))
    return AmbientPoint(r1=r1, r2=r2, r3=r3, th1=th1, th2=th2, th3=s - th1 - th2)


def analytic_lambda(fam: ProfileFamily, t: float, s: float) -> ChartOneForm:
    """Closed-form restriction of the contact form to the (th1, th2, s) chart."""
    c = curve_point(fam, t, s)
    return ChartOneForm(
        a=c.x,
        b=c.y,
        c=(1.0 - c.x - c.y) / 3.0,
        da=c.dx,
        db=c.dy,
        dc=-(c.dx + c.dy) / 3.0,
    )


def _fd_tangent(point_at, q0: float, h: float) -> AmbientTangent:
    """Central-difference tangent of a curve q -> AmbientPoint at q0."""
    pp = point_at(q0 + h)
    pm = point_at(q0 - h)
    inv = 0.5 / h
    return AmbientTangent(
        dr1=(pp.r1 - pm.r1) * inv,
        dr2=(pp.r2 - pm.r2) * inv,
        dr3=(pp.r3 - pm.r3) * inv,
        dth1=(pp.th1 - pm.th1) * inv,
        dth2=(pp.th2 - pm.th2) * inv,
        dth3=(pp.th3 - pm.th3) * inv,
    )


def _pullback_coeffs(
    fam: ProfileFamily, t: float, th1: float, th2: float, s: float, h: float
) -> tuple[float, float, float]:
    p = embed_chart(fam, t, th1, th2, s)
    va = _fd_tangent(lambda q: embed_chart(fam, t, q, th2, s), th1, h)
    vb = _fd_tangent(lambda q: embed_chart(fam, t, th1, q, s), th2, h)
    vc = _fd_tangent(lambda q: embed_chart(fam, t, th1, th2, q), s, h)
    return alpha_eval(p, va), alpha_eval(p, vb), alpha_eval(p, vc)


def numeric_pullback(
    fam: ProfileFamily,
    t: float,
    th1: float,
    th2: float,
    s: float,
    h: float = 1e-5,
) -> ChartOneForm:
    """Finite-difference pullback of the contact form through the chart
    embedding: independent oracle for :func:`analytic_lambda`.

    Pushes the three chart basis vectors through the embedding by central
    differences and evaluates the contact form on each; coefficient
    s-derivatives come from a second differencing level.  Needs s +- 2h
    inside (-delta, delta); the step shrinks and retries near the chart
    edge before giving up.
    """
    d = fam.delta
    for _ in range(4):
        if abs(s) + 2.0 * h < d:
            break
        h *= 0.1
    else:
        raise DomainError(f"s = {s} too close to the chart edge +-{d}")
    a, b, c = _pullback_coeffs(fam, t, th1, th2, s, h)
    ap, bp, cp = _pullback_coeffs(fam, t, th1, th2, s + h, h)
    am, bm, cm = _pullback_coeffs(fam, t, th1, th2, s - h, h)
    inv = 0.5 / h
    return ChartOneForm(
        a=a, b=b, c=c, da=(ap - am) * inv, db=(bp - bm) * inv, dc=(cp - cm) * inv
    )


def wedge_coefficient(f: ChartOneForm) -> float:
    """Coefficient of lambda ^ d(lambda) relative to dth1 ^ dth2 ^ ds > 0
    for a chart form with s-dependent coefficients: a'b - ab'."""
    return f.da * f.b - f.a * f.db


def mu_form(t: float, r2: float) -> tuple[float, float]:
    """Restriction of the contact form to the smooth cap model, in
    cylindrical coordinates (th1, (r2, th2)): returns the (dth1, dth2)
    coefficient pair (1 - 3 r2^2/(3-2t), 3(1-t) r2^2/(3-2t))."""
    if t < 0.0 or t >= 1.5:
        raise DomainError(f"t must lie in [0, 1.5), got {t}")
    k = 3.0 - 2.0 * t
    r1_sq = 1.0 - (3.0 - t) / k * r2 * r2
    r3_sq = t / k * r2 * r2
    if r1_sq < -SIMPLEX_TOL or r3_sq < -SIMPLEX_TOL:
        raise DomainError(f"r2 = {r2} outside the cap range at t = {t}")
    return (1.0 - 3.0 / k * r2 * r2, 3.0 * (1.0 - t) / k * r2 * r2)


def mu_wedge_coefficient(t: float) -> float:
    """Coefficient of mu ^ d(mu) relative to dth1 ^ (r2 dr2 ^ dth2):
    6(1-t)/(3-2t)."""
    if t < 0.0 or t >= 1.5:
        raise DomainError(f"t must lie in [0, 1.5), got {t}")
    return 6.0 * (1.0 - t) / (3.0 - 2.0 * t)
