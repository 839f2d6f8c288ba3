"""p-trigonometric functions for real p >= 1.

sin_p is evaluated by inverting the monotone arcsin_p integral with a
safeguarded Newton iteration on the first eighth of the period, and extended
to the real line by symmetry and 2*pi_p periodicity. The coupled ODE
integrator is kept as an independent check.
"""
from __future__ import annotations

import math
from typing import List, Tuple

from .config import logger
from .errors import ArgumentError, DomainError, PoleError
from .models import PlanePoint, PParam, QuadratureConfig
from .quadrature import tanh_sinh

NEWTON_STEP_TOL = 1e-13
NEWTON_MAX_ITER = 80
POLE_THRESHOLD = 1e-300


def _pi_p(p: float) -> float:
    from .pi import pi_gamma
    return pi_gamma(p)


def _cfg(cfg: QuadratureConfig | None) -> QuadratureConfig:
    return cfg or QuadratureConfig.default()


def _one_minus_power(u: float, p: float) -> float:
    """1 - (1 - u)^p for u in [0, 1]."""
    if u >= 1.0:
        return 1.0
    return -math.expm1(p * math.log1p(-u))


def complement_kernel(s: float, p: float) -> float:
    """Integrand of arcsin_p after the substitution 1 - t = s^p.

    Bounded on [0, 1]: p^(1/p) at s = 0 and p at s = 1.
    """
    alpha = (p - 1.0) / p
    u = s ** p
    if u == 0.0:
        return p ** (1.0 / p)
    return p * (u / _one_minus_power(u, p)) ** alpha


def arc_length_kernel(s: float, p: float) -> float:
    """Quarter-arc length integrand of the p-circle in the same variable."""
    alpha = (p - 1.0) / p
    u = s ** p
    if u == 0.0:
        return p ** (1.0 / p)
    d = _one_minus_power(u, p)
    return p * (u / d) ** alpha * math.sqrt(d ** (2.0 * alpha) + (1.0 - u) ** (2.0 * p - 2.0))


def _check_unit(x: float, name: str) -> float:
    x = float(x)
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"{name} needs x in [0, 1], got {x!r}")
    return x


def arcsin_p(x: float, p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    """Integral of (1 - t^p)^(-(p-1)/p) from 0 to x."""
    pp = PParam.of(p)
    x = _check_unit(x, "arcsin_p")
    cfg = _cfg(cfg)
    if x == 0.0:
        return 0.0
    p_ = pp.p
    if p_ == 1.0:
        return x
    alpha = pp.alpha
    if x <= 0.5:
        return tanh_sinh(lambda t: (1.0 - t ** p_) ** -alpha, 0.0, x, cfg).value
    s_lo = (1.0 - x) ** (1.0 / p_)
    return tanh_sinh(lambda s: complement_kernel(s, p_), s_lo, 1.0, cfg).value


def arccos_p(x: float, p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    """Integral of (1 - t^p)^(-(p-1)/p) from x to 1."""
    pp = PParam.of(p)
    x = _check_unit(x, "arccos_p")
    cfg = _cfg(cfg)
    if x == 1.0:
        return 0.0
    p_ = pp.p
    if p_ == 1.0:
        return 1.0 - x
    s_hi = (1.0 - x) ** (1.0 / p_)
    return tanh_sinh(lambda s: complement_kernel(s, p_), 0.0, s_hi, cfg).value


def _solve_arcsin(t: float, pp: PParam, cfg: QuadratureConfig) -> float:
    """x in [0, 2^(-1/p)] with arcsin_p(x) = t, for 0 <= t <= pi_p/4."""
    if t <= 0.0:
        return 0.0
    p_ = pp.p
    if p_ == 1.0:
        return t
    alpha = pp.alpha
    lo, hi = 0.0, 2.0 ** (-1.0 / p_)
    # arcsin_p is convex with arcsin_p(x) >= x, so Newton from the right of the root is monotone
    x = min(t, hi)
    for iteration in range(NEWTON_MAX_ITER):
        residual = arcsin_p(x, pp, cfg) - t
        if residual > 0.0:
            hi = x
        elif residual < 0.0:
            lo = x
        else:
            return x
        step = residual * (1.0 - x ** p_) ** alpha
        candidate = x - step
        if not (lo <= candidate <= hi):
            candidate = 0.5 * (lo + hi)
        if abs(candidate - x) < NEWTON_STEP_TOL:
            logger.debug(f"arcsin_p inversion converged in {iteration + 1} steps (t={t!r}, p={p_})")
            return candidate
        x = candidate
    logger.warning(f"⚠️ arcsin_p inversion hit {NEWTON_MAX_ITER} iterations at t={t!r}, p={p_}")
    return x


def _power_complement(y: float, p: float) -> float:
    """(1 - y^p)^(1/p) for y in [0, 1]."""
    yp = y ** p
    if yp >= 1.0:
        return 0.0
    return math.exp(math.log1p(-yp) / p)


def _sin_quarter(t: float, pp: PParam, cfg: QuadratureConfig, half_pi: float) -> float:
    """sin_p on [0, pi_p/2]."""
    if t >= half_pi:
        return 1.0
    if t <= 0.5 * half_pi:
        return _solve_arcsin(t, pp, cfg)
    return _power_complement(_solve_arcsin(half_pi - t, pp, cfg), pp.p)


def _cos_quarter(t: float, pp: PParam, cfg: QuadratureConfig, half_pi: float) -> float:
    """cos_p on [0, pi_p/2]."""
    if t <= 0.0:
        return 1.0
    if t <= 0.5 * half_pi:
        return _power_complement(_solve_arcsin(t, pp, cfg), pp.p)
    return _solve_arcsin(max(half_pi - t, 0.0), pp, cfg)


def _reduce(t: float, period: float) -> float:
    r = math.fmod(float(t), period)
    if r < 0.0:
        r += period
    if r >= period:
        r -= period
    return r


def sin_p(t: float, p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    pp = PParam.of(p)
    cfg = _cfg(cfg)
    if not math.isfinite(t):
        raise DomainError(f"sin_p needs a finite argument, got {t!r}")
    pi_p = _pi_p(pp.p)
    half_pi = 0.5 * pi_p
    r = _reduce(t, 2.0 * pi_p)
    if r > pi_p:
        return -_sin_quarter(_fold_half(2.0 * pi_p - r, pi_p), pp, cfg, half_pi)
    return _sin_quarter(_fold_half(r, pi_p), pp, cfg, half_pi)


def _fold_half(r: float, pi_p: float) -> float:
    """Map r in [0, pi_p] onto [0, pi_p/2] via r -> pi_p - r."""
    return r if r <= 0.5 * pi_p else pi_p - r


def cos_p(t: float, p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    pp = PParam.of(p)
    cfg = _cfg(cfg)
    if not math.isfinite(t):
        raise DomainError(f"cos_p needs a finite argument, got {t!r}")
    pi_p = _pi_p(pp.p)
    half_pi = 0.5 * pi_p
    r = _reduce(t, 2.0 * pi_p)
    if r > pi_p:
        r = 2.0 * pi_p - r
    if r <= half_pi:
        return _cos_quarter(r, pp, cfg, half_pi)
    return -_cos_quarter(pi_p - r, pp, cfg, half_pi)


def _quotient(name: str, num: float, den: float, t: float) -> float:
    if abs(den) < POLE_THRESHOLD:
        raise PoleError(name, t)
    return num / den


def tan_p(t: float, p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    return _quotient("tan_p", sin_p(t, p, cfg), cos_p(t, p, cfg), t)


def sec_p(t: float, p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    return _quotient("sec_p", 1.0, cos_p(t, p, cfg), t)


def csc_p(t: float, p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    return _quotient("csc_p", 1.0, sin_p(t, p, cfg), t)


def cot_p(t: float, p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    return _quotient("cot_p", cos_p(t, p, cfg), sin_p(t, p, cfg), t)


FUNCTIONS = {
    "sin": sin_p,
    "cos": cos_p,
    "tan": tan_p,
    "sec": sec_p,
    "csc": csc_p,
    "cot": cot_p,
    "arcsin": arcsin_p,
    "arccos": arccos_p,
}


def _pow(v: float, e: float) -> float:
    if e == 0.0:
        return 1.0
    return max(v, 0.0) ** e


def civp_integrate(p: PParam | float, t_end: float, step: float) -> List[Tuple[float, float, float]]:
    """RK4 trajectory of x' = -y^(p-1), y' = x^(p-1), x(0) = 1, y(0) = 0.

    Valid on the first-quadrant arc only; the final step is shortened to land
    on t_end exactly.
    """
    pp = PParam.of(p)
    if step <= 0.0 or not math.isfinite(step):
        raise ArgumentError(f"step must be positive, got {step!r}")
    if t_end < 0.0:
        raise ArgumentError(f"t_end must be non-negative, got {t_end!r}")
    half_pi = 0.5 * _pi_p(pp.p)
    if t_end > half_pi * (1.0 + 1e-12):
        raise DomainError(f"t_end={t_end!r} is past pi_p/2={half_pi!r}")

    e = pp.p - 1.0

    def rhs(x: float, y: float) -> Tuple[float, float]:
        return -_pow(y, e), _pow(x, e)

    t, x, y = 0.0, 1.0, 0.0
    trajectory = [(t, x, y)]
    n_steps = math.ceil(t_end / step - 1e-9) if t_end > 0 else 0
    for i in range(n_steps):
        h = step if i < n_steps - 1 else t_end - t
        if h <= 0.0:
            break
        k1x, k1y = rhs(x, y)
        k2x, k2y = rhs(x + 0.5 * h * k1x, y + 0.5 * h * k1y)
        k3x, k3y = rhs(x + 0.5 * h * k2x, y + 0.5 * h * k2y)
        k4x, k4y = rhs(x + h * k3x, y + h * k3y)
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
        t = t_end if i == n_steps - 1 else t + h
        trajectory.append((t, x, y))
    return trajectory


def areal_point(a: float, p: PParam | float, cfg: QuadratureConfig | None = None) -> PlanePoint:
    """Point (cos_p 2a, sin_p 2a) bounding a sector of area a."""
    pp = PParam.of(p)
    quarter = 0.25 * _pi_p(pp.p)
    if not (0.0 <= a <= quarter * (1.0 + 1e-12)):
        raise DomainError(f"areal parameter must lie in [0, pi_p/4={quarter!r}], got {a!r}")
    angle = min(2.0 * a, 2.0 * quarter)
    return PlanePoint(cos_p(angle, pp, cfg), sin_p(angle, pp, cfg))


def sector_area(x: float, p: PParam | float, cfg: QuadratureConfig | None = None) -> float:
    """Area of the sector from (1, 0) to the first-quadrant point with abscissa x."""
    pp = PParam.of(p)
    x = _check_unit(x, "sector_area")
    p_ = pp.p
    y = _power_complement(x, p_)
    tail = tanh_sinh(lambda t: _power_complement(t, p_), x, 1.0, _cfg(cfg)).value
    return 0.5 * x * y + tail


def double_angle_defect(p: PParam | float, points: int = 100, cfg: QuadratureConfig | None = None) -> float:
    """max |sin_p(2t) - 2 sin_p(t) cos_p(t)| over a grid on [0, pi_p/2]."""
    if points < 2:
        raise ArgumentError("double_angle_defect needs at least 2 grid points")
    pp = PParam.of(p)
    half_pi = 0.5 * _pi_p(pp.p)
    worst = 0.0
    for i in range(points):
        t = half_pi * i / (points - 1)
        defect = abs(sin_p(2.0 * t, pp, cfg) - 2.0 * sin_p(t, pp, cfg) * cos_p(t, pp, cfg))
        worst = max(worst, defect)
    return worst
