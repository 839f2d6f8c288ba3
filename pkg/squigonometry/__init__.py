"""Generalized p-trigonometry package.

Modules:
- config: environment, logging and memo caches
- errors: exception hierarchy with CLI exit codes
- models: shared value types and tags
- exactmath: Stirling numbers, factorials, Bell polynomials, gamma/beta
- quadrature: tanh-sinh integration
- ptrig: sin_p, cos_p, their inverses and reciprocals
- series: exact Taylor series, Lagrange inversion, bracket derivatives
- pi: pi_p by closed form, quadrature, series and Monte Carlo
- geometry: area, perimeter, curvature, optimal p, rational points
- formatting / storage / commands / app: command-line front end

Public facade (re-export) for callers and tests.
"""

from .config import Config, DEFAULT_TOL, DEFAULT_MAX_LEVELS
from .errors import (
    SquigError,
    ArgumentError,
    DomainError,
    PoleError,
    AccuracyError,
    SolverError,
)
from .models import (
    Method,
    Objective,
    PointKind,
    PParam,
    QuadratureConfig,
    PlanePoint,
    Estimate,
    OptimalResult,
    RationalPoint,
    RigidityRow,
)
from .exactmath import (
    BigRational,
    IntPolynomial,
    stirling_first,
    falling_factorial_poly,
    rising_factorial,
    bell_partial,
    gamma,
    beta,
    duplication_ratio,
)
from .quadrature import tanh_sinh, QuadratureResult
from .ptrig import (
    arcsin_p,
    arccos_p,
    sin_p,
    cos_p,
    tan_p,
    sec_p,
    csc_p,
    cot_p,
    civp_integrate,
    areal_point,
    sector_area,
    double_angle_defect,
)
from .series import (
    PowerSeries,
    Affine,
    BracketTerm,
    BracketExpr,
    GammaForms,
    RigidityReport,
    compose,
    arcsin_series,
    arcsin_derivative_at_zero,
    arcsin_derivative_gamma_forms,
    lagrange_invert,
    sin_series,
    sinc_limit_check,
    leading_correction,
    bracket_differentiate,
    bracket_derivative,
    bracket_substitute,
    bracket_evaluate_at_zero,
    first_term_coefficient,
    rigidity_report,
    rigidity_mismatches,
)
from .pi import (
    MonotonicityScan,
    pi_gamma,
    pi_duplication,
    pi_defining_integral,
    pi_area_integral,
    pi_series,
    pi_monte_carlo,
    pi_monotonicity_scan,
    pi_estimate,
)
from .geometry import (
    PointClassification,
    area,
    perimeter,
    curvature_implicit,
    curvature_diagonal,
    optimal_p,
    pythagorean_point,
    rational_point_classification,
    p_norm,
    parallelogram_defect,
)
from .app import main

__all__ = [
    "Config",
    "DEFAULT_TOL",
    "DEFAULT_MAX_LEVELS",
    "SquigError",
    "ArgumentError",
    "DomainError",
    "PoleError",
    "AccuracyError",
    "SolverError",
    "Method",
    "Objective",
    "PointKind",
    "PParam",
    "QuadratureConfig",
    "PlanePoint",
    "Estimate",
    "OptimalResult",
    "RationalPoint",
    "RigidityRow",
    "BigRational",
    "IntPolynomial",
    "stirling_first",
    "falling_factorial_poly",
    "rising_factorial",
    "bell_partial",
    "gamma",
    "beta",
    "duplication_ratio",
    "tanh_sinh",
    "QuadratureResult",
    "arcsin_p",
    "arccos_p",
    "sin_p",
    "cos_p",
    "tan_p",
    "sec_p",
    "csc_p",
    "cot_p",
    "civp_integrate",
    "areal_point",
    "sector_area",
    "double_angle_defect",
    "PowerSeries",
    "Affine",
    "BracketTerm",
    "BracketExpr",
    "GammaForms",
    "RigidityReport",
    "compose",
    "arcsin_series",
    "arcsin_derivative_at_zero",
    "arcsin_derivative_gamma_forms",
    "lagrange_invert",
    "sin_series",
    "sinc_limit_check",
    "leading_correction",
    "bracket_differentiate",
    "bracket_derivative",
    "bracket_substitute",
    "bracket_evaluate_at_zero",
    "first_term_coefficient",
    "rigidity_report",
    "rigidity_mismatches",
    "MonotonicityScan",
    "pi_gamma",
    "pi_duplication",
    "pi_defining_integral",
    "pi_area_integral",
    "pi_series",
    "pi_monte_carlo",
    "pi_monotonicity_scan",
    "pi_estimate",
    "PointClassification",
    "area",
    "perimeter",
    "curvature_implicit",
    "curvature_diagonal",
    "optimal_p",
    "pythagorean_point",
    "rational_point_classification",
    "p_norm",
    "parallelogram_defect",
    "main",
]
