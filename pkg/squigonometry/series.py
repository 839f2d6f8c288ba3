"""Exact Taylor series of arcsin_p and sin_p for integer p >= 2.

Series are stored factorial-normalized: c_k is the k-th derivative at 0, so
the represented function is sum c_k z^k / k!.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .config import cached_computation, logger
from .errors import ArgumentError, DomainError
from .exactmath import IntPolynomial, bell_partial, falling_factorial_poly, gamma, rising_factorial
from .models import RigidityRow

MAX_ORDER = 200
MAX_RIGIDITY_DEPTH = 60


@dataclass(frozen=True)
class PowerSeries:
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ArgumentError("a power series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def from_ordinary(cls, ordinary: Sequence[Fraction]) -> "PowerSeries":
        """Build from ordinary coefficients a_k of sum a_k z^k."""
        return cls(tuple(Fraction(a) * math.factorial(k) for k, a in enumerate(ordinary)))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def ordinary(self) -> List[Fraction]:
        return [c / math.factorial(k) for k, c in enumerate(self.coefficients)]

    def nonzero_orders(self) -> List[int]:
        return [k for k, c in enumerate(self.coefficients) if c != 0]

    def evaluate(self, z: float) -> float:
        acc = 0.0
        for a in reversed(self.ordinary()):
            acc = acc * z + float(a)
        return acc

    def to_json(self) -> Dict[str, object]:
        return {
            "order": self.order,
            "coefficients": [f"{c.numerator}/{c.denominator}" for c in self.coefficients],
        }


def _truncated_product(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> List[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            if y:
                out[i + j] += x * y
    return out


def compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f(g(z)) truncated at the smaller of the two orders; needs g(0) = 0."""
    if g[0] != 0:
        raise ArgumentError("inner series of a composition must vanish at 0")
    order = min(f.order, g.order)
    fa = f.ordinary()[: order + 1]
    ga = g.ordinary()[: order + 1]
    acc: List[Fraction] = [Fraction(0)] * (order + 1)
    for a in reversed(fa):
        acc = _truncated_product(acc, ga, order)
        acc[0] += a
    return PowerSeries.from_ordinary(acc)


def _check_integer_p(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise ArgumentError(f"series need an integer p, got {p!r}")
    if p < 2:
        raise ArgumentError(f"series need p >= 2, got {p}")
    return p


def _check_order(max_order: int) -> int:
    if isinstance(max_order, bool) or not isinstance(max_order, int):
        raise ArgumentError(f"order must be an integer, got {max_order!r}")
    if not (1 <= max_order <= MAX_ORDER):
        raise ArgumentError(f"order must lie in [1, {MAX_ORDER}], got {max_order}")
    return max_order


@cached_computation(lambda p, max_order: (p, max_order))
def arcsin_series(p: int, max_order: int) -> PowerSeries:
    """Newton binomial expansion of arcsin_p: only orders l = kp + 1 are nonzero."""
    _check_integer_p(p)
    _check_order(max_order)
    a = Fraction(p - 1, p)
    coeffs: List[Fraction] = []
    for l in range(max_order + 1):
        if l % p != 1:
            coeffs.append(Fraction(0))
            continue
        k = (l - 1) // p
        coeffs.append(rising_factorial(a, k) * math.factorial(l) / (math.factorial(k) * l))
    return PowerSeries(tuple(coeffs))


def arcsin_derivative_at_zero(n: int, l: int) -> Fraction:
    """l-th derivative of arcsin_n at 0."""
    _check_integer_p(n)
    if isinstance(l, bool) or not isinstance(l, int) or l < 1:
        raise ArgumentError(f"derivative order must be a positive integer, got {l!r}")
    if l % n != 1:
        return Fraction(0)
    k = (l - 1) // n
    return rising_factorial(Fraction(n - 1, n), k) * math.factorial(k * n) / math.factorial(k)


@dataclass(frozen=True)
class GammaForms:
    exact: Fraction
    corrected: float
    printed: Optional[float]


def arcsin_derivative_gamma_forms(n: int, l: int) -> GammaForms:
    """The exact derivative next to its two gamma-function closed forms.

    `corrected` uses Gamma(k + 1 - 1/n); `printed` uses Gamma(k - 1/n), which
    is off by one factor and disagrees already at (n, l) = (2, 3).
    """
    exact = arcsin_derivative_at_zero(n, l)
    if l % n != 1:
        return GammaForms(exact, 0.0, 0.0)
    k = (l - 1) // n
    scale = math.factorial(k * n) / math.factorial(k)
    base = gamma(1.0 - 1.0 / n)
    corrected = gamma(k + 1.0 - 1.0 / n) / base * scale
    printed_arg = k - 1.0 / n
    printed = gamma(printed_arg) / base * scale if printed_arg > 0 else None
    return GammaForms(exact, corrected, printed)


def lagrange_invert(f: PowerSeries) -> PowerSeries:
    """Compositional inverse via the Bell-polynomial form of Lagrange inversion."""
    if f.order < 1:
        raise ArgumentError("lagrange_invert needs a series of order at least 1")
    if f[0] != 0:
        raise ArgumentError("lagrange_invert needs f_0 = 0")
    if f[1] == 0:
        raise ArgumentError("lagrange_invert needs f_1 != 0")
    f1 = f[1]
    order = f.order
    fhat = [Fraction(0)] + [f[k + 1] / ((k + 1) * f1) for k in range(1, order)]
    g: List[Fraction] = [Fraction(0), 1 / f1]
    for n in range(2, order + 1):
        total = Fraction(0)
        for k in range(1, n):
            bell = bell_partial(n - 1, k, fhat[1 : n - k + 1])
            if bell:
                total += (-1) ** k * rising_factorial(Fraction(n), k) * bell
        g.append(total / f1 ** n)
    return PowerSeries(tuple(g))


@cached_computation(lambda p, max_order: (p, max_order))
def sin_series(p: int, max_order: int) -> PowerSeries:
    return lagrange_invert(arcsin_series(p, max_order))


def sinc_limit_check(p: int) -> Fraction:
    """g_1 of sin_p, the limit of sin_p(x)/x at 0."""
    return sin_series(p, 1)[1]


def leading_correction(p: int) -> Fraction:
    """Limit of (sin_p(x) - x) / x^(p+1) at 0."""
    _check_integer_p(p)
    return sin_series(p, p + 1)[p + 1] / math.factorial(p + 1)


# Bracket calculus: [m, n]_p = cos_p^m sin_p^n with exponents affine in p


@dataclass(frozen=True, order=True)
class Affine:
    """The exponent a + b*p."""
    a: int
    b: int = 0

    def poly(self) -> IntPolynomial:
        return IntPolynomial.from_affine(self.a, self.b)

    def evaluate(self, p: int) -> int:
        return self.a + self.b * p

    def shifted(self, da: int, db: int = 0) -> "Affine":
        return Affine(self.a + da, self.b + db)

    def __str__(self) -> str:
        return IntPolynomial.from_affine(self.a, self.b).format("p")


@dataclass(frozen=True)
class BracketTerm:
    coefficient: IntPolynomial
    m: Affine
    n: Affine

    def key(self) -> Tuple[int, int, int, int]:
        return (self.m.a, self.m.b, self.n.a, self.n.b)

    def __str__(self) -> str:
        return f"({self.coefficient})[{self.m}, {self.n}]_p"


@dataclass(frozen=True)
class BracketExpr:
    terms: Tuple[BracketTerm, ...] = ()

    def __post_init__(self) -> None:
        merged: Dict[Tuple[Affine, Affine], IntPolynomial] = {}
        for term in self.terms:
            slot = (term.m, term.n)
            merged[slot] = merged.get(slot, IntPolynomial()) + term.coefficient
        canonical = [BracketTerm(c, m, n) for (m, n), c in merged.items() if not c.is_zero()]
        canonical.sort(key=BracketTerm.key)
        object.__setattr__(self, "terms", tuple(canonical))

    @classmethod
    def bracket(cls, m: Affine, n: Affine, coefficient: int = 1) -> "BracketExpr":
        return cls((BracketTerm(IntPolynomial.constant(coefficient), m, n),))

    def coefficient_of(self, m: Affine, n: Affine) -> IntPolynomial:
        for term in self.terms:
            if term.m == m and term.n == n:
                return term.coefficient
        return IntPolynomial()

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms) if self.terms else "0"


SIN_BRACKET = BracketExpr.bracket(Affine(0), Affine(1))


def bracket_differentiate(e: BracketExpr) -> BracketExpr:
    """d/dx [m, n]_p = -m [m-1, n+p-1]_p + n [m+p-1, n-1]_p, termwise."""
    out: List[BracketTerm] = []
    for term in e.terms:
        out.append(BracketTerm(-(term.coefficient * term.m.poly()), term.m.shifted(-1), term.n.shifted(-1, 1)))
        out.append(BracketTerm(term.coefficient * term.n.poly(), term.m.shifted(-1, 1), term.n.shifted(-1)))
    return BracketExpr(tuple(out))


@cached_computation(lambda l: l)
def bracket_derivative(l: int) -> BracketExpr:
    """l-th derivative of sin_p = [0, 1]_p in bracket form."""
    if isinstance(l, bool) or not isinstance(l, int) or l < 0:
        raise ArgumentError(f"derivative order must be a non-negative integer, got {l!r}")
    if l == 0:
        return SIN_BRACKET
    return bracket_differentiate(bracket_derivative(l - 1))


def bracket_substitute(e: BracketExpr, p: int) -> Dict[Tuple[int, int], int]:
    """Resolve exponents and coefficients at an integer p; zero terms dropped."""
    out: Dict[Tuple[int, int], int] = {}
    for term in e.terms:
        c = term.coefficient.evaluate(p)
        if c == 0:
            continue
        slot = (term.m.evaluate(p), term.n.evaluate(p))
        out[slot] = out.get(slot, 0) + c
    return {k: v for k, v in out.items() if v != 0}


def bracket_evaluate_at_zero(e: BracketExpr, p: int) -> int:
    """Value at x = 0 where cos_p = 1 and sin_p = 0 (0^0 = 1)."""
    total = 0
    for (m, n), c in bracket_substitute(e, p).items():
        if n < 0:
            raise DomainError(f"term [{m}, {n}] has a negative sin_p exponent and is singular at 0")
        if n == 0:
            total += c
    return total


def first_term_coefficient(n: int) -> IntPolynomial:
    """(-1)^(n-1) (p-1)_(n-1), the coefficient of [p-n, (n-1)(p-1)]_p in the n-th derivative."""
    if n < 1:
        raise ArgumentError(f"first_term_coefficient needs n >= 1, got {n}")
    sign = 1 if n % 2 == 1 else -1
    return falling_factorial_poly(n - 1).shift_argument(-1).scale(sign)


@dataclass(frozen=True)
class RigidityReport:
    n: int
    depth: int
    rows: Tuple[RigidityRow, ...]
    conjecture_consistent: bool
    rigid: bool

    @property
    def summary(self) -> str:
        verdict = "consistent with" if self.conjecture_consistent else "CONTRADICTS"
        return (
            f"conjecture check (not a proof), n={self.n}, orders 1..{self.depth}: "
            f"nonzero coefficients {verdict} l ≡ 1 (mod {self.n}); "
            f"arcsin/sin vanishing pattern {'agrees' if self.rigid else 'differs'}"
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "depth": self.depth,
            "rows": [row.to_dict() for row in self.rows],
            "conjecture_consistent": self.conjecture_consistent,
            "rigid": self.rigid,
            "summary": self.summary,
        }


def rigidity_report(n: int, depth: int) -> RigidityReport:
    """Compare the vanishing patterns of the arcsin_n and sin_n series."""
    _check_integer_p(n)
    if isinstance(depth, bool) or not isinstance(depth, int) or not (1 <= depth <= MAX_RIGIDITY_DEPTH):
        raise ArgumentError(f"depth must lie in [1, {MAX_RIGIDITY_DEPTH}], got {depth!r}")
    arcsin = arcsin_series(n, depth)
    sine = sin_series(n, depth)
    rows = []
    for l in range(1, depth + 1):
        a, s = arcsin[l], sine[l]
        expected = l % n == 1
        rows.append(RigidityRow(l, a, s, a != 0 and s != 0, (a != 0) == expected and (s != 0) == expected))
    consistent = all(row.pattern_holds for row in rows)
    rigid = all((row.arcsin_coefficient != 0) == (row.sin_coefficient != 0) for row in rows)
    report = RigidityReport(n, depth, tuple(rows), consistent, rigid)
    if not consistent:
        logger.warning(f"⚠️ {report.summary}")
    return report


def rigidity_mismatches(f: PowerSeries) -> List[int]:
    """Orders where f and its compositional inverse disagree on vanishing."""
    g = lagrange_invert(f)
    return [k for k in range(1, f.order + 1) if (f[k] != 0) != (g[k] != 0)]
