"""Independent computations of pi_p, the area of the unit p-circle."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .config import MC_CHUNK, MC_WORKERS, cached_computation, logger
from .errors import ArgumentError, DomainError
from .exactmath import gamma
from .models import Estimate, Method, PParam, QuadratureConfig
from .ptrig import complement_kernel
from .quadrature import tanh_sinh

SEED_LIMIT = 2 ** 64


def _check_p(p: float) -> float:
    if isinstance(p, bool) or not isinstance(p, (int, float)):
        raise ArgumentError(f"p must be a real number, got {p!r}")
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise DomainError(f"pi_p needs p >= 1, got {p!r}")
    return p


@cached_computation(lambda p: p)
def pi_gamma(p: float) -> float:
    """2 Gamma(1/p)^2 / (p Gamma(2/p)), evaluated as 4 Gamma(1 + 1/p)^2 / Gamma(1 + 2/p).

    Both gamma arguments stay in [1, 3], so the value is finite for every p >= 1.
    """
    p = _check_p(p)
    if math.isinf(p):
        return 4.0
    return 4.0 * gamma(1.0 + 1.0 / p) ** 2 / gamma(1.0 + 2.0 / p)


def pi_duplication(p: float) -> float:
    """Duplication-formula form 2 Gamma(1/p + 1) 2^(1-2/p) sqrt(pi) / Gamma(1/p + 1/2)."""
    p = _check_p(p)
    z = 1.0 / p
    return 2.0 * gamma(z + 1.0) * 2.0 ** (1.0 - 2.0 * z) * math.sqrt(math.pi) / gamma(z + 0.5)


def pi_defining_integral(p: PParam | float, cfg: QuadratureConfig | None = None) -> Estimate:
    """Twice the complete arcsin_p integral."""
    p_ = PParam.of(p).p
    if p_ == 1.0:
        return Estimate(2.0, 0.0, Method.DEFINING_INTEGRAL)
    res = tanh_sinh(lambda s: complement_kernel(s, p_), 0.0, 1.0, cfg)
    return Estimate(2.0 * res.value, 2.0 * res.error, Method.DEFINING_INTEGRAL, res.evaluations)


def pi_area_integral(p: PParam | float, cfg: QuadratureConfig | None = None) -> Estimate:
    """Four times the first-quadrant area under (1 - x^p)^(1/p)."""
    p_ = PParam.of(p).p

    def quarter(x: float) -> float:
        xp = x ** p_
        if xp >= 1.0:
            return 0.0
        return math.exp(math.log1p(-xp) / p_)

    res = tanh_sinh(quarter, 0.0, 1.0, cfg)
    return Estimate(4.0 * res.value, 4.0 * res.error, Method.AREA_INTEGRAL, res.evaluations)


def pi_series(p: int, terms: int) -> Estimate:
    """Partial sum of twice the arcsin_p series at x = 1.

    The error field is the magnitude of the last included term, which is
    indicative only at this boundary point of convergence.
    """
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise ArgumentError(f"pi_series needs an integer p >= 2, got {p!r}")
    if isinstance(terms, bool) or not isinstance(terms, int) or terms < 1:
        raise ArgumentError(f"terms must be a positive integer, got {terms!r}")
    a = (p - 1) / p
    c = 1.0  # a^(k) / k!
    total = 0.0
    last = 0.0
    for k in range(terms):
        if k > 0:
            c *= (a + k - 1) / k
        last = c / (k * p + 1)
        total += last
    return Estimate(2.0 * total, 2.0 * abs(last), Method.SERIES, terms)


def _stream(seed: int, chunk: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(chunk,))))


def _count_hits(p: float, seed: int, chunk: int, size: int) -> int:
    rng = _stream(seed, chunk)
    pts = np.abs(rng.uniform(-1.0, 1.0, size=(2, size)))
    if p == 2.0:
        inside = pts[0] * pts[0] + pts[1] * pts[1] <= 1.0
    else:
        inside = np.power(pts[0], p) + np.power(pts[1], p) <= 1.0
    return int(np.count_nonzero(inside))


def pi_monte_carlo(
    p: PParam | float,
    n: int,
    seed: int,
    workers: int = MC_WORKERS,
    chunk_size: int = MC_CHUNK,
) -> Estimate:
    """Dartboard estimate 4 t / n from n uniform points in [-1, 1]^2.

    Samples are split into fixed-size chunks, chunk i drawing from its own
    stream spawned from (seed, i), so the result depends on the seed and the
    chunk size but never on the number of workers.
    """
    p_ = PParam.of(p).p
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ArgumentError(f"sample count must be a positive integer, got {n!r}")
    if isinstance(seed, bool) or not isinstance(seed, int) or not (0 <= seed < SEED_LIMIT):
        raise ArgumentError(f"seed must be an integer in [0, 2^64), got {seed!r}")
    if workers < 1:
        raise ArgumentError(f"workers must be at least 1, got {workers!r}")
    if chunk_size < 1:
        raise ArgumentError(f"chunk size must be at least 1, got {chunk_size!r}")

    sizes = [chunk_size] * (n // chunk_size)
    if n % chunk_size:
        sizes.append(n % chunk_size)

    if workers == 1 or len(sizes) == 1:
        hits = sum(_count_hits(p_, seed, i, size) for i, size in enumerate(sizes))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(lambda job: _count_hits(p_, seed, *job), enumerate(sizes)))

    q = hits / n
    value = 4.0 * q
    error = 4.0 * math.sqrt(q * (1.0 - q) / n)
    logger.info(f"Monte Carlo pi_{p_:g}: {hits}/{n} hits -> {value!r} ± {error:.2e} (seed {seed})")
    return Estimate(value, error, Method.MONTE_CARLO, n, seed)


@dataclass(frozen=True)
class MonotonicityScan:
    rows: Tuple[Tuple[float, float], ...]
    strictly_increasing: bool
    gap_to_limit: float

    def to_dict(self):
        return {
            "rows": [{"p": p, "pi_p": v} for p, v in self.rows],
            "strictly_increasing": self.strictly_increasing,
            "gap_to_limit": self.gap_to_limit,
        }


def pi_monotonicity_scan(p_grid: Sequence[float]) -> MonotonicityScan:
    """pi_gamma over an ascending grid, flagging any adjacent non-increase."""
    grid = [float(p) for p in p_grid]
    if not grid:
        raise ArgumentError("p grid is empty")
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise ArgumentError("p grid must be sorted ascending")
    rows = tuple((p, pi_gamma(p)) for p in grid)
    increasing = all(b[1] > a[1] for a, b in zip(rows, rows[1:]))
    if not increasing:
        logger.warning(f"⚠️ pi_p not strictly increasing on grid {grid}")
    return MonotonicityScan(rows, increasing, 4.0 - rows[-1][1])


METHODS = {
    "gamma": Method.GAMMA,
    "integral": Method.DEFINING_INTEGRAL,
    "area": Method.AREA_INTEGRAL,
    "series": Method.SERIES,
    "mc": Method.MONTE_CARLO,
    "duplication": Method.DUPLICATION,
}


def pi_estimate(
    p: float,
    method: str | Method = Method.GAMMA,
    *,
    cfg: QuadratureConfig | None = None,
    terms: int = 1000,
    n: int | None = None,
    seed: int | None = None,
    workers: int = MC_WORKERS,
) -> Estimate:
    """Dispatch on a method tag and wrap closed forms as estimates."""
    m = METHODS.get(method, method) if isinstance(method, str) else method
    if not isinstance(m, Method):
        raise ArgumentError(f"unknown pi method {method!r}; choose from {', '.join(METHODS)}")
    if m is Method.GAMMA:
        return Estimate(pi_gamma(p), 0.0, m)
    if m is Method.DUPLICATION:
        return Estimate(pi_duplication(p), 0.0, m)
    if m is Method.DEFINING_INTEGRAL:
        return pi_defining_integral(p, cfg)
    if m is Method.AREA_INTEGRAL:
        return pi_area_integral(p, cfg)
    if m is Method.SERIES:
        if not float(p).is_integer():
            raise ArgumentError(f"series method needs an integer p, got {p!r}")
        return pi_series(int(p), terms)
    if seed is None:
        raise ArgumentError("Monte Carlo needs an explicit seed")
    if n is None:
        raise ArgumentError("Monte Carlo needs a sample count")
    return pi_monte_carlo(p, n, seed, workers)
