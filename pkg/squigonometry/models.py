from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from .config import Config, DEFAULT_MAX_LEVELS, DEFAULT_TOL
from .errors import ArgumentError, DomainError


class Method(Enum):
    """How a value of pi_p was obtained"""
    GAMMA = "gamma"
    DEFINING_INTEGRAL = "defining-integral"
    AREA_INTEGRAL = "area-integral"
    SERIES = "series"
    MONTE_CARLO = "monte-carlo"
    DUPLICATION = "duplication"


class Objective(Enum):
    """Targets of the optimal-p solvers"""
    AREA = "area"
    PERIMETER = "perimeter"
    CURVATURE = "curvature"


class PointKind(Enum):
    """Shape of the rational point set on a p-circle"""
    DENSE = "dense"
    PYTHAGOREAN = "pythagorean"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class PParam:
    p: float

    def __post_init__(self) -> None:
        if isinstance(self.p, bool):
            raise ArgumentError("p must be a number")
        value = float(self.p)
        if not math.isfinite(value):
            raise DomainError(f"p must be finite, got {self.p!r}")
        if value < 1.0:
            raise DomainError(f"p must be at least 1, got {self.p!r}")
        object.__setattr__(self, "p", value)

    @classmethod
    def of(cls, p: "PParam | float") -> "PParam":
        return p if isinstance(p, PParam) else cls(p)

    @property
    def alpha(self) -> float:
        """Exponent (p-1)/p of the arcsin_p integrand."""
        return (self.p - 1.0) / self.p


@dataclass(frozen=True)
class QuadratureConfig:
    tol: float = DEFAULT_TOL
    max_levels: int = DEFAULT_MAX_LEVELS

    def __post_init__(self) -> None:
        if not (Config.MIN_TOL <= self.tol <= Config.MAX_TOL):
            raise ArgumentError(
                f"tolerance must lie in [{Config.MIN_TOL:g}, {Config.MAX_TOL:g}], got {self.tol!r}"
            )
        if isinstance(self.max_levels, bool) or int(self.max_levels) != self.max_levels:
            raise ArgumentError(f"max_levels must be an integer, got {self.max_levels!r}")
        if not (Config.MIN_LEVELS <= self.max_levels <= Config.MAX_LEVELS_LIMIT):
            raise ArgumentError(
                f"max_levels must lie in [{Config.MIN_LEVELS}, {Config.MAX_LEVELS_LIMIT}], got {self.max_levels!r}"
            )

    @classmethod
    def default(cls) -> "QuadratureConfig":
        return cls(DEFAULT_TOL, DEFAULT_MAX_LEVELS)

    def to_dict(self) -> Dict[str, Any]:
        return {"tol": self.tol, "max_levels": self.max_levels}


@dataclass(frozen=True)
class PlanePoint:
    x: float
    y: float

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Estimate:
    """A value of pi_p with its error indicator.

    `error` is a quadrature difference bound, a Monte Carlo standard error or,
    for series, the magnitude of the last included term.
    """
    value: float
    error: float
    method: Method
    samples: int = 0
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.error < 0:
            raise ArgumentError("estimate error must be non-negative")
        if (self.seed is not None) != (self.method is Method.MONTE_CARLO):
            raise ArgumentError("a seed is recorded exactly for Monte Carlo estimates")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "error": self.error,
            "method": self.method.value,
            "n": self.samples,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class OptimalResult:
    p_star: float
    residual: float
    bracket: Tuple[float, float]
    iterations: int
    objective: Objective
    note: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "objective": self.objective.value,
            "p_star": self.p_star,
            "residual": self.residual,
            "bracket": list(self.bracket),
            "iterations": self.iterations,
            "note": self.note,
        }


@dataclass(frozen=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    def residual(self, p: int) -> Fraction:
        """Exact |x|^p + |y|^p - 1."""
        return abs(self.x) ** p + abs(self.y) ** p - 1

    def to_dict(self) -> Dict[str, str]:
        return {"x": str(self.x), "y": str(self.y)}

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class RigidityRow:
    order: int
    arcsin_coefficient: Fraction
    sin_coefficient: Fraction
    both_nonzero: bool
    pattern_holds: bool = field(default=True)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "arcsin": str(self.arcsin_coefficient),
            "sin": str(self.sin_coefficient),
            "both_nonzero": self.both_nonzero,
            "pattern_holds": self.pattern_holds,
        }
