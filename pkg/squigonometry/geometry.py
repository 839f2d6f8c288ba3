"""Geometry of the unit p-circle |x|^p + |y|^p = 1."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from scipy.optimize import brentq

from .config import logger
from .errors import ArgumentError, DomainError, SolverError
from .models import Objective, OptimalResult, PointKind, PParam, QuadratureConfig, RationalPoint
from .pi import pi_area_integral
from .ptrig import arc_length_kernel
from .quadrature import tanh_sinh

ON_CIRCLE_TOL = 1e-6
DEFAULT_SOLVER_TOL = 1e-10

AREA_TARGET = (math.pi + 4.0) / 2.0
PERIMETER_TARGET = math.pi + 4.0
CURVATURE_TARGET = 0.5

BRACKETS: Dict[Objective, Tuple[float, float]] = {
    Objective.AREA: (2.0, 6.0),
    Objective.PERIMETER: (2.0, 10.0),
    Objective.CURVATURE: (1.0, 2.0),
}


def area(p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    """Area enclosed by the unit p-circle."""
    return pi_area_integral(p, cfg).value


def perimeter(p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    """Euclidean length of the unit p-circle.

    The quarter-arc integral is taken in the variable s with x = 1 - s^p,
    which removes the derivative singularity at x = 1.
    """
    p_ = PParam.of(p).p
    return 4.0 * tanh_sinh(lambda s: arc_length_kernel(s, p_), 0.0, 1.0, cfg).value


def curvature_implicit(x: float, y: float, p: PParam | float) -> float:
    """Curvature of the p-circle at a first-quadrant point (x, y)."""
    p_ = PParam.of(p).p
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"curvature needs a point off the axes, got ({x!r}, {y!r})")
    residual = abs(x ** p_ + y ** p_ - 1.0)
    if residual > ON_CIRCLE_TOL:
        raise DomainError(f"({x!r}, {y!r}) is not on the unit {p_:g}-circle (residual {residual:.2e})")
    num = x ** p_ * y ** (2 * p_) + x ** (2 * p_) * y ** p_
    den = (x ** (2 * p_) * y ** 2 + y ** (2 * p_) * x ** 2) ** 1.5
    return (p_ - 1.0) * num / den * (x * y)


def curvature_diagonal(p: PParam | float) -> float:
    """Curvature at x = y; 0 for p = 1 by the straight-edge convention."""
    p_ = PParam.of(p).p
    return (p_ - 1.0) * 2.0 ** (1.0 / p_ - 0.5)


def _objective_function(objective: Objective, cfg: QuadratureConfig | None) -> Callable[[float], float]:
    if objective is Objective.AREA:
        return lambda p: area(p, cfg) - AREA_TARGET
    if objective is Objective.PERIMETER:
        return lambda p: perimeter(p, cfg) - PERIMETER_TARGET
    return lambda p: curvature_diagonal(p) - CURVATURE_TARGET


def optimal_p(
    objective: Objective | str,
    tol: float = DEFAULT_SOLVER_TOL,
    cfg: QuadratureConfig | None = None,
    bracket: Optional[Tuple[float, float]] = None,
) -> OptimalResult:
    """Solve for the p at which area, perimeter or diagonal curvature hits its target."""
    try:
        obj = Objective(objective) if isinstance(objective, str) else objective
    except ValueError:
        raise ArgumentError(
            f"unknown objective {objective!r}; choose from {', '.join(o.value for o in Objective)}"
        ) from None
    if not tol >= 1e-10:
        raise ArgumentError(f"solver tolerance must be at least 1e-10, got {tol!r}")
    lo, hi = bracket or BRACKETS[obj]
    if not lo < hi:
        raise ArgumentError(f"bracket must satisfy lo < hi, got ({lo!r}, {hi!r})")
    f = _objective_function(obj, cfg)

    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0 or f_hi == 0.0:
        root = lo if f_lo == 0.0 else hi
        return OptimalResult(root, 0.0, (lo, hi), 0, obj, _note(obj))
    if (f_lo > 0) == (f_hi > 0):
        raise SolverError(
            f"{obj.value} objective has the same sign at both ends of [{lo:g}, {hi:g}] "
            f"({f_lo:.3e}, {f_hi:.3e})"
        )

    try:
        root, info = brentq(f, lo, hi, xtol=tol, full_output=True, disp=False)
    except (ValueError, RuntimeError) as e:
        raise SolverError(f"{obj.value} solver failed: {e}") from e
    if not info.converged:
        raise SolverError(f"{obj.value} solver did not converge: {info.flag}", best_estimate=root)

    residual = abs(f(root))
    logger.info(f"✅ optimal p for {obj.value}: {root!r} ({info.iterations} iterations, residual {residual:.2e})")
    return OptimalResult(root, residual, (lo, hi), info.iterations, obj, _note(obj))


def _note(obj: Objective) -> Optional[str]:
    if obj is Objective.CURVATURE:
        return "p = 1 also has diagonal curvature 1/2 under the convention that the square's is 0"
    return None


def pythagorean_point(u: int, v: int) -> RationalPoint:
    """((u^2 - v^2)/(u^2 + v^2), 2uv/(u^2 + v^2)) on the unit circle."""
    for name, val in (("u", u), ("v", v)):
        if isinstance(val, bool) or not isinstance(val, int):
            raise ArgumentError(f"{name} must be an integer, got {val!r}")
    if not (u > v >= 1):
        raise ArgumentError(f"pythagorean_point needs u > v >= 1, got u={u}, v={v}")
    hyp = u * u + v * v
    return RationalPoint(Fraction(u * u - v * v, hyp), Fraction(2 * u * v, hyp))


def _dense_family() -> Iterator[RationalPoint]:
    """(t, 1 - t) for t = a/b in [0, 1], enumerated by denominator."""
    yield RationalPoint(Fraction(0), Fraction(1))
    yield RationalPoint(Fraction(1), Fraction(0))
    b = 2
    while True:
        for a in range(1, b):
            if math.gcd(a, b) == 1:
                t = Fraction(a, b)
                yield RationalPoint(t, 1 - t)
        b += 1


def _pythagorean_family() -> Iterator[RationalPoint]:
    """Points from coprime (u, v) of opposite parity, by increasing u."""
    u = 2
    while True:
        for v in range(1, u):
            if (u - v) % 2 == 1 and math.gcd(u, v) == 1:
                yield pythagorean_point(u, v)
        u += 1


AXIS_POINTS = (
    RationalPoint(Fraction(1), Fraction(0)),
    RationalPoint(Fraction(0), Fraction(1)),
    RationalPoint(Fraction(-1), Fraction(0)),
    RationalPoint(Fraction(0), Fraction(-1)),
)


@dataclass(frozen=True)
class PointClassification:
    p: int
    kind: PointKind
    description: str
    justification: str
    points: Tuple[RationalPoint, ...] = field(default=())

    @property
    def finite(self) -> bool:
        return self.kind is PointKind.TRIVIAL

    def samples(self, count: int) -> List[RationalPoint]:
        """First `count` points of the family (all of them when finite)."""
        if self.kind is PointKind.DENSE:
            source: Iterator[RationalPoint] = _dense_family()
        elif self.kind is PointKind.PYTHAGOREAN:
            source = _pythagorean_family()
        else:
            return list(self.points[:count])
        return [next(source) for _ in range(count)]

    def to_dict(self, sample_count: int = 5) -> Dict[str, object]:
        pts = self.points if self.finite else tuple(self.samples(sample_count))
        return {
            "p": self.p,
            "kind": self.kind.value,
            "finite": self.finite,
            "description": self.description,
            "justification": self.justification,
            "points": [pt.to_dict() for pt in pts],
        }


def rational_point_classification(p: int | float) -> PointClassification:
    """Describe the rational points of the unit p-circle for integer p >= 1."""
    if isinstance(p, bool) or not isinstance(p, (int, float)):
        raise ArgumentError(f"p must be an integer, got {p!r}")
    if isinstance(p, float):
        if not p.is_integer():
            raise ArgumentError(f"rational points are classified for integer p only, got {p!r}")
        p = int(p)
    if p < 1:
        raise ArgumentError(f"p must be at least 1, got {p}")
    if p == 1:
        return PointClassification(
            1,
            PointKind.DENSE,
            "infinite (dense): all points (t, 1 - t), t rational in [0, 1], plus sign variants",
            "x + y = 1 is linear over the rationals",
        )
    if p == 2:
        return PointClassification(
            2,
            PointKind.PYTHAGOREAN,
            "infinite: Pythagorean parametrization ((u^2 - v^2)/(u^2 + v^2), 2uv/(u^2 + v^2))",
            "rational points correspond to Pythagorean triples",
        )
    return PointClassification(
        p,
        PointKind.TRIVIAL,
        "four trivial points on the axes",
        "Fermat's Last Theorem",
        AXIS_POINTS,
    )


def p_norm(x: float, y: float, p: PParam | float) -> float:
    p_ = PParam.of(p).p
    return (abs(x) ** p_ + abs(y) ** p_) ** (1.0 / p_)


def parallelogram_defect(u: Tuple[float, float], v: Tuple[float, float], p: PParam | float) -> float:
    """|u+v|^2 + |u-v|^2 - 2|u|^2 - 2|v|^2 in the p-norm; vanishes identically only for p = 2."""
    s = (u[0] + v[0], u[1] + v[1])
    d = (u[0] - v[0], u[1] - v[1])
    return (
        p_norm(*s, p) ** 2 + p_norm(*d, p) ** 2
        - 2.0 * p_norm(*u, p) ** 2 - 2.0 * p_norm(*v, p) ** 2
    )
