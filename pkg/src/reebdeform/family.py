"""Per-t analysis of the deformation family: classification, cap relation,
open-book coefficient, the overtwisted tube, and surface sampling.

The contact/integrable trichotomy is read off the wedge coefficient of the
restricted contact form.  Since the chart coefficients depend only on s
(the construction is invariant under the torus action), classification
sweeps an s-grid only; a random subgrid is cross-checked against the
finite-difference pullback oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .ambient import (
    AmbientPoint,
    SimplexPoint,
    analytic_lambda,
    embed_chart,
    numeric_pullback,
    simplex_to_radii,
    wedge_coefficient,
)
from .profiles import DomainError, ProfileFamily, blended_ramp, curve_point, s_of_u

INTEGRABLE_TOL = 1e-10

VERDICT_POSITIVE = "contact_positive"
VERDICT_INTEGRABLE = "integrable"
VERDICT_NEGATIVE = "contact_negative"

_CROSSCHECK_SEED = 20260823


class InconsistencyError(RuntimeError):
    """Wedge samples mixed signs beyond tolerance: the surface is not a
    contact submanifold at this t.

    For t > 1 this is the measured outcome near s = 0: the wedge
    coefficient at s = 0 equals (1 - t)^2 u'(0) / 2 > 0 for every
    admissible profile (the smoothed ramp is flat at u = 0), while it is
    negative away from the center.  The error carries the grid evidence.
    """

    def __init__(self, msg: str, t: float, n_pos: int, n_neg: int, n_zero: int):
        super().__init__(msg)
        self.t = t
        self.n_pos = n_pos
        self.n_neg = n_neg
        self.n_zero = n_zero


@dataclass(frozen=True)
class ClassificationReport:
    t: float
    verdict: str
    min_abs_wedge: float
    max_abs_wedge: float
    grid_size: int
    crosscheck_max_rel_err: float
    orientation: str = "standard"

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "verdict": self.verdict,
            "min_abs_wedge": self.min_abs_wedge,
            "max_abs_wedge": self.max_abs_wedge,
            "grid_size": self.grid_size,
            "crosscheck_max_rel_err": self.crosscheck_max_rel_err,
            "orientation": self.orientation,
        }


@dataclass(frozen=True)
class TubeReport:
    """Region where the dth1 coefficient of the restricted form is <= 0;
    only nonempty for t > 1."""

    t: float
    root_u: float
    tube_interval: tuple[float, float]


@dataclass
class SurfaceMesh:
    """Grid sample of one deformation surface.

    ``interior`` is indexed [i_s][i_th1][i_th2]; the two degenerate ends
    collapse onto great circles and are stored separately.
    """

    t: float
    s_values: np.ndarray
    interior: list  # nested lists of AmbientPoint
    cap_pos: list  # circle r1 = 1 at s = +delta
    cap_neg: list  # circle r2 = 1 at s = -delta

    def vertex_count(self) -> int:
        n_s = len(self.interior)
        n1 = len(self.interior[0]) if n_s else 0
        n2 = len(self.interior[0][0]) if n1 else 0
        return n_s * n1 * n2 + len(self.cap_pos) + len(self.cap_neg)

    def all_points(self):
        for sheet in self.interior:
            for row in sheet:
                yield from row
        yield from self.cap_pos
        yield from self.cap_neg


def interior_s_grid(fam: ProfileFamily, n: int) -> np.ndarray:
    """n interior s-samples, symmetric, excluding the endpoints +-delta."""
    return np.linspace(-fam.delta, fam.delta, n + 2)[1:-1]


def classify(
    fam: ProfileFamily,
    t: float,
    grid_size: int = 201,
    crosscheck_points: int = 8,
    crosscheck_h: float = 1e-5,
) -> ClassificationReport:
    """Classify the surface at parameter t by the sign of the wedge
    coefficient over an interior s-grid.

    All samples positive -> contact_positive; all within INTEGRABLE_TOL of
    zero -> integrable; all negative -> contact_negative (the co-oriented
    structure is positive on the orientation-reversed surface, flagged in
    ``orientation``).  Mixed signs raise :class:`InconsistencyError`.
    """
    ss = interior_s_grid(fam, grid_size)
    w = np.array([wedge_coefficient(analytic_lambda(fam, t, s)) for s in ss])
    max_abs = float(np.max(np.abs(w)))
    min_abs = float(np.min(np.abs(w)))
    if max_abs <= INTEGRABLE_TOL:
        verdict = VERDICT_INTEGRABLE
        orientation = "standard"
    elif np.all(w > 0.0):
        verdict = VERDICT_POSITIVE
        orientation = "standard"
    elif np.all(w < 0.0):
        verdict = VERDICT_NEGATIVE
        orientation = "reversed"
    else:
        n_pos = int(np.sum(w > INTEGRABLE_TOL))
        n_neg = int(np.sum(w < -INTEGRABLE_TOL))
        n_zero = len(w) - n_pos - n_neg
        raise InconsistencyError(
            f"wedge samples at t = {t} mix signs beyond tolerance "
            f"({n_pos} positive, {n_neg} negative, {n_zero} near zero)",
            t=t,
            n_pos=n_pos,
            n_neg=n_neg,
            n_zero=n_zero,
        )

    rng = np.random.default_rng(_CROSSCHECK_SEED)
    idx = rng.choice(len(ss), size=min(crosscheck_points, len(ss)), replace=False)
    max_rel = 0.0
    for i in sorted(idx):
        th1, th2 = rng.uniform(0.0, 2.0 * np.pi, size=2)
        wa = w[i]
        wn = wedge_coefficient(
            numeric_pullback(fam, t, th1, th2, float(ss[i]), h=crosscheck_h)
        )
        max_rel = max(max_rel, abs(wn - wa) / max(abs(wa), 1e-9))
    return ClassificationReport(
        t=t,
        verdict=verdict,
        min_abs_wedge=min_abs,
        max_abs_wedge=max_abs,
        grid_size=grid_size,
        crosscheck_max_rel_err=max_rel,
        orientation=orientation,
    )


def oracle_agreement_err(
    fam: ProfileFamily,
    t: float,
    n_th1: int = 20,
    n_th2: int = 20,
    n_s: int = 20,
    h: float = 1e-5,
    abs_floor: float = 1e-9,
    rel_tol: float = 1e-6,
) -> float:
    """Max scaled disagreement between the finite-difference pullback and
    the closed-form chart coefficients over a (th1, th2, s) grid.

    The returned value compares against ``rel_tol``: for each coefficient
    the error is |numeric - analytic| / max(|analytic|, abs_floor/rel_tol),
    i.e. relative with an absolute floor of ``abs_floor``.
    """
    floor = abs_floor / rel_tol
    th1s = np.linspace(0.0, 2.0 * np.pi, n_th1, endpoint=False)
    th2s = np.linspace(0.0, 2.0 * np.pi, n_th2, endpoint=False)
    worst = 0.0
    for s in interior_s_grid(fam, n_s):
        exact = analytic_lambda(fam, t, float(s))
        for a1 in th1s:
            for a2 in th2s:
                num = numeric_pullback(fam, t, float(a1), float(a2), float(s), h=h)
                for ce, cn in zip(
                    (exact.a, exact.b, exact.c), (num.a, num.b, num.c)
                ):
                    worst = max(worst, abs(cn - ce) / max(abs(ce), floor))
    return worst


def cap_relation_residual(fam: ProfileFamily, t: float, n_samples: int = 1000) -> float:
    """Max violation of the cap identity 3 r3^2 = t/(3-2t) * 3 r2^2 over the
    cap parameter range u in [1/2, 1]."""
    if not 0.0 < t < 1.5:
        raise DomainError(f"t must lie in (0, 1.5), got {t}")
    ratio = t / (3.0 - 2.0 * t)
    worst = 0.0
    for u in np.linspace(0.5, 1.0, n_samples):
        s = s_of_u(fam, float(u))
        c = curve_point(fam, t, s)
        e2 = 1.0 - c.x + 2.0 * c.y
        e3 = 1.0 - c.x - c.y
        worst = max(worst, abs(e3 - ratio * e2))
    return worst


def cap_c1_residual(fam: ProfileFamily, t: float, h: float = 1e-4) -> float:
    """Finite-difference probe of first-order smoothness of the cap across
    the collapsed circle at s = +delta.

    The cap disk {th1 = const} is parametrized by the complex variable
    w = r2 exp(i th2); in ambient Cartesian coordinates z2 = w exp(i th1
    shift), z3 is proportional to conj(w), and z1 depends on |w|^2 only, so
    the embedding is differentiable at w = 0.  The probe compares one-sided
    difference quotients through 0 along two orthogonal lines and returns
    the worst mismatch (full C-infinity verification is out of numeric
    reach).
    """
    if not 0.0 < t < 1.5:
        raise DomainError(f"t must lie in (0, 1.5), got {t}")
    ratio = t / (3.0 - 2.0 * t)

    def point(re_w: float, im_w: float):
        r2_sq = re_w * re_w + im_w * im_w
        r1 = np.sqrt(1.0 - (1.0 + ratio) * r2_sq)
        # z1 = r1, z2 = w, z3 = sqrt(ratio) * conj(w) * exp(i delta)
        cd, sd = np.cos(fam.delta), np.sin(fam.delta)
        return np.array(
            [
                r1,
                0.0,
                re_w,
                im_w,
                np.sqrt(ratio) * (re_w * cd + im_w * sd),
                np.sqrt(ratio) * (re_w * sd - im_w * cd),
            ]
        )

    worst = 0.0
    for dx, dy in ((1.0, 0.0), (0.0, 1.0)):

        def central(step):
            return (point(step * dx, step * dy) - point(-step * dx, -step * dy)) / (
                2.0 * step
            )

        # C1 evidence: the symmetric difference quotient stabilizes as the
        # step shrinks (would diverge or drift at a corner).
        worst = max(worst, float(np.max(np.abs(central(h) - central(0.5 * h)))))
    return worst


def openbook_coefficient(fam: ProfileFamily, t: float, s: float) -> float:
    """x'(s) - y'(s): the density of d(th1 + th2) ^ d(lambda) relative to
    dth1 ^ dth2 ^ ds.  Strictly positive for t < 1 (supporting open book);
    for t > 1 its measured sign profile is diagnostic output only."""
    c = curve_point(fam, t, s)
    return c.dx - c.dy


def openbook_sign_profile(
    fam: ProfileFamily, t: float, grid_size: int = 201
) -> list[int]:
    """Signs of the open-book coefficient over the interior s-grid."""
    out = []
    for s in interior_s_grid(fam, grid_size):
        v = openbook_coefficient(fam, t, float(s))
        out.append(0 if v == 0.0 else (1 if v > 0.0 else -1))
    return out


def lutz_tube(fam: ProfileFamily, t: float, xtol: float = 1e-14) -> TubeReport:
    """Locate the region {x_t(s) <= 0} for t > 1.

    The blended ramp is negative at u = 0 and 1 at u = 1, so a sign change
    exists on (0, 1); the bracket root maps through s(u) to the right end
    of the tube interval, whose left end is -delta (where x vanishes).
    """
    if t <= 1.0:
        raise DomainError(f"tube requires t > 1, got {t} (x_t > 0 on the interior)")
    root_u = float(brentq(lambda u: blended_ramp(fam, t, u), 0.0, 1.0, xtol=xtol))
    s_root = s_of_u(fam, root_u)
    return TubeReport(t=t, root_u=root_u, tube_interval=(-fam.delta, s_root))


def sample_surface(
    fam: ProfileFamily, t: float, n_th1: int, n_th2: int, n_s: int
) -> SurfaceMesh:
    """Grid mesh of the surface over (th1, th2, s), the degenerate fibers at
    s = +-delta collapsed to the two great circles (r1 = 1 and r2 = 1)."""
    if min(n_th1, n_th2, n_s) < 2:
        raise DomainError("mesh resolutions must be >= 2")
    d = fam.delta
    s_values = np.linspace(-d, d, n_s)
    th1s = np.linspace(0.0, 2.0 * np.pi, n_th1, endpoint=False)
    th2s = np.linspace(0.0, 2.0 * np.pi, n_th2, endpoint=False)
    interior = [
        [[embed_chart(fam, t, float(a1), float(a2), float(s)) for a2 in th2s] for a1 in th1s]
        for s in s_values[1:-1]
    ]
    cap_pos = [
        AmbientPoint(r1=1.0, r2=0.0, r3=0.0, th1=float(a), th2=0.0, th3=d - float(a))
        for a in th1s
    ]
    cap_neg = [
        AmbientPoint(r1=0.0, r2=1.0, r3=0.0, th1=0.0, th2=float(a), th3=-d - float(a))
        for a in th1s
    ]
    return SurfaceMesh(
        t=t, s_values=s_values, interior=interior, cap_pos=cap_pos, cap_neg=cap_neg
    )
