"""Numerical certification of a deformation of the standard 3-sphere in the
5-sphere: contact for t < 1, foliated by Legendrian leaves at t = 1,
overtwisted (after orientation reversal) for t > 1."""

from .profiles import (
    CurveSample,
    DomainError,
    ProfileFamily,
    SmoothStepParams,
    areal_velocity,
    curve_point,
    s_of_u,
    u_of_s,
)
from .ambient import (
    AmbientPoint,
    AmbientTangent,
    ChartOneForm,
    SimplexPoint,
    alpha_eval,
    analytic_lambda,
    embed_chart,
    mu_form,
    mu_wedge_coefficient,
    numeric_pullback,
    radii_to_simplex,
    simplex_to_radii,
    wedge_coefficient,
)
from .family import (
    ClassificationReport,
    InconsistencyError,
    TubeReport,
    cap_relation_residual,
    classify,
    lutz_tube,
    openbook_coefficient,
    oracle_agreement_err,
    sample_surface,
)
from .foliation import (
    HolonomyReport,
    LeafCurve,
    LeafSurface,
    PoleError,
    integrate_leaf,
    leaf_slope,
    leaf_surface,
    legendrian_residual,
    spiral_divergence,
    torus_leaf,
    torus_residual,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
