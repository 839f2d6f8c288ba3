"""Exact combinatorial primitives and floating-point gamma/beta.

BigRational is `fractions.Fraction`: always in lowest terms with a positive
denominator. IntPolynomial stores integer coefficients by degree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from .config import cached_computation, logger
from .errors import ArgumentError, DomainError

BigRational = Fraction


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def from_affine(cls, a: int, b: int) -> "IntPolynomial":
        """The polynomial a + b*x."""
        return cls((a, b))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * a for a in self.coefficients))

    def evaluate(self, x):
        """Horner evaluation; works for int, Fraction and float arguments."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def shift_argument(self, c: int) -> "IntPolynomial":
        """Substitute x -> x + c."""
        result = IntPolynomial()
        shift = IntPolynomial((c, 1))
        for coeff in reversed(self.coefficients):
            result = result * shift + IntPolynomial.constant(coeff)
        return result

    def format(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format("p")


@cached_computation(lambda n: n)
def _stirling_row(n: int) -> Tuple[int, ...]:
    row: Tuple[int, ...] = (1,)
    for m in range(n):
        # s(m+1, k) = s(m, k-1) - m*s(m, k)
        prev = row
        row = tuple(
            (prev[k - 1] if k >= 1 else 0) - m * (prev[k] if k < len(prev) else 0)
            for k in range(m + 2)
        )
    return row


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k)."""
    if not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in (n, k)):
        raise ArgumentError(f"stirling_first takes non-negative integers, got ({n!r}, {k!r})")
    if k > n:
        return 0
    return _stirling_row(n)[k]


def falling_factorial_poly(n: int) -> IntPolynomial:
    """(x)_n = x(x-1)...(x-n+1); coefficient k is s(n, k)."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ArgumentError(f"falling_factorial_poly takes a non-negative integer, got {n!r}")
    return IntPolynomial(_stirling_row(n))


def rising_factorial(a: Fraction, k: int) -> Fraction:
    if k < 0:
        raise ArgumentError("rising_factorial takes a non-negative count")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def _bell_index_sequences(n: int, k: int, x: Sequence[Fraction]) -> Iterator[Tuple[int, ...]]:
    """Yield (j_1, ..., j_m) with sum j = k and sum i*j_i = n, skipping zero x_i."""
    m = len(x)
    seq = [0] * m

    def walk(i: int, parts_left: int, weight_left: int) -> Iterator[Tuple[int, ...]]:
        if parts_left == 0:
            if weight_left == 0:
                yield tuple(seq)
            return
        if i == m:
            return
        size = i + 1
        # remaining parts all have size in [size, m]
        if parts_left * size > weight_left or parts_left * m < weight_left:
            return
        top = 0 if x[i] == 0 else min(parts_left, weight_left // size)
        for j in range(top, -1, -1):
            seq[i] = j
            yield from walk(i + 1, parts_left - j, weight_left - j * size)
        seq[i] = 0

    yield from walk(0, k, n)


def bell_partial(n: int, k: int, x: Sequence[Fraction]) -> Fraction:
    """Partial exponential Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1})."""
    if n < 1 or k < 1 or k > n:
        raise ArgumentError(f"bell_partial needs 1 <= k <= n, got n={n}, k={k}")
    if len(x) != n - k + 1:
        raise ArgumentError(
            f"bell_partial({n}, {k}) expects {n - k + 1} arguments, got {len(x)}"
        )
    xs = [Fraction(v) for v in x]
    n_fact = math.factorial(n)
    total = Fraction(0)
    for js in _bell_index_sequences(n, k, xs):
        term = Fraction(n_fact)
        for i, j in enumerate(js):
            if j == 0:
                continue
            size = i + 1
            term *= (xs[i] / math.factorial(size)) ** j / math.factorial(j)
        total += term
    return total


# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def _lanczos(x: float) -> float:
    z = x - 1.0
    a = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        a += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    # t**(z+0.5) split in two halves to stay finite up to x ~ 171
    half = t ** ((z + 0.5) / 2.0)
    return _SQRT_TWO_PI * half * (half * math.exp(-t)) * a


def gamma(x: float) -> float:
    """Gamma function for real x > 0."""
    x = float(x)
    if not x > 0.0 or math.isnan(x):
        raise DomainError(f"gamma is only defined here for x > 0, got {x!r}")
    if x < 0.5:
        value = _lanczos(x + 1.0) / x
    else:
        value = _lanczos(x)
    if math.isinf(value):
        raise DomainError(f"gamma overflows at x={x!r}")
    return value


def beta(x: float, y: float) -> float:
    if x <= 0 or y <= 0:
        raise DomainError(f"beta needs positive arguments, got ({x!r}, {y!r})")
    return gamma(x) * gamma(y) / gamma(x + y)


def duplication_ratio(z: float) -> float:
    """Gamma(2z) 2^(1-2z) sqrt(pi) / (Gamma(z) Gamma(z + 1/2)); identically 1."""
    ratio = gamma(2.0 * z) * 2.0 ** (1.0 - 2.0 * z) * math.sqrt(math.pi) / (gamma(z) * gamma(z + 0.5))
    logger.debug(f"duplication ratio at z={z}: {ratio!r}")
    return ratio
