#!/usr/bin/env python3
"""
p-circle geometry tests: area, perimeter, curvature, optimal p and rational points
"""

import math
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from squigonometry import (
    ArgumentError,
    DomainError,
    Objective,
    PointKind,
    SolverError,
    area,
    curvature_diagonal,
    curvature_implicit,
    optimal_p,
    p_norm,
    parallelogram_defect,
    perimeter,
    pi_gamma,
    pythagorean_point,
    rational_point_classification,
)
from squigonometry.geometry import AREA_TARGET, CURVATURE_TARGET, PERIMETER_TARGET


def test_area_examples():
    assert area(2) == pytest.approx(math.pi, rel=1e-10)
    assert area(1) == pytest.approx(2.0, rel=1e-10)
    assert area(3.162038) == pytest.approx((math.pi + 4.0) / 2.0, abs=1e-4)


@pytest.mark.parametrize("p", [1, 1.7, 2, 3, 4, 8])
def test_area_matches_closed_form(p):
    assert area(p) == pytest.approx(pi_gamma(p), abs=1e-9)


def test_perimeter_examples():
    assert perimeter(2) == pytest.approx(2.0 * math.pi, abs=1e-8)
    assert perimeter(1) == pytest.approx(4.0 * math.sqrt(2.0), rel=1e-10)
    assert perimeter(4.667489) == pytest.approx(math.pi + 4.0, abs=1e-4)


def test_perimeter_monotone_below_square():
    values = [perimeter(p) for p in (2, 3, 4, 6, 10)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[-1] < 8.0


def test_curvature_examples():
    r = 1.0 / math.sqrt(2.0)
    assert curvature_implicit(r, r, 2) == pytest.approx(1.0, rel=1e-12)
    assert curvature_diagonal(2) == pytest.approx(1.0, rel=1e-12)
    assert curvature_diagonal(1) == 0.0
    assert curvature_diagonal(1.43643264) == pytest.approx(0.5, abs=1e-6)


@pytest.mark.parametrize("p", [1.2, 2, 3, 5])
def test_curvature_on_diagonal(p):
    a = 2.0 ** (-1.0 / p)
    assert curvature_implicit(a, a, p) == pytest.approx(curvature_diagonal(p), abs=1e-9)
    assert curvature_diagonal(p) == pytest.approx((p - 1.0) * 2.0 ** (1.0 / p - 0.5), rel=1e-14)


@pytest.mark.parametrize("x", [0.2, 0.4, 0.6])
def test_curvature_matches_finite_differences(x):
    """Graph curvature |y''| / (1 + y'^2)^(3/2) of y = (1 - x^3)^(1/3)"""
    p, h = 3.0, 1e-3

    def y(t):
        return (1.0 - t ** p) ** (1.0 / p)

    d1 = (y(x + h) - y(x - h)) / (2 * h)
    d2 = (y(x + h) - 2 * y(x) + y(x - h)) / (h * h)
    expected = abs(d2) / (1.0 + d1 * d1) ** 1.5
    assert curvature_implicit(x, y(x), p) == pytest.approx(expected, abs=1e-4)


def test_curvature_domain():
    with pytest.raises(DomainError):
        curvature_implicit(0.5, 0.5, 2)
    with pytest.raises(DomainError):
        curvature_implicit(1.0, 0.0, 3)
    with pytest.raises(DomainError):
        curvature_implicit(0.0, 1.0, 3)


@pytest.mark.parametrize(
    "objective,expected,tolerance",
    [("area", 3.162038, 1e-4), ("perimeter", 4.667489, 1e-4), ("curvature", 1.43643264, 1e-5)],
)
def test_optimal_p(objective, expected, tolerance):
    result = optimal_p(objective)
    assert result.p_star == pytest.approx(expected, abs=tolerance)
    lo, hi = result.bracket
    assert lo < result.p_star < hi
    assert result.iterations > 0


def test_optimal_residuals():
    assert abs(area(optimal_p(Objective.AREA).p_star) - AREA_TARGET) < 1e-8
    assert abs(perimeter(optimal_p(Objective.PERIMETER).p_star) - PERIMETER_TARGET) < 1e-8
    assert abs(curvature_diagonal(optimal_p(Objective.CURVATURE).p_star) - CURVATURE_TARGET) < 1e-8


def test_optimal_independent_of_bracket():
    wide = optimal_p("curvature")
    narrow = optimal_p("curvature", bracket=(1.3, 1.6))
    assert narrow.p_star == pytest.approx(wide.p_star, abs=1e-9)


def test_curvature_note():
    assert "p = 1" in optimal_p("curvature").note
    assert optimal_p("area").note is None


def test_optimal_errors():
    with pytest.raises(ArgumentError):
        optimal_p("volume")
    with pytest.raises(ArgumentError):
        optimal_p("area", tol=1e-12)
    with pytest.raises(ArgumentError):
        optimal_p("area", bracket=(4.0, 3.0))
    with pytest.raises(SolverError) as info:
        optimal_p("curvature", bracket=(1.5, 2.0))
    assert info.value.exit_code == 4


def test_pythagorean_points():
    pt = pythagorean_point(2, 1)
    assert (pt.x, pt.y) == (Fraction(3, 5), Fraction(4, 5))
    assert str(pt) == "(3/5, 4/5)"
    pt = pythagorean_point(3, 2)
    assert (pt.x, pt.y) == (Fraction(5, 13), Fraction(12, 13))
    assert pt.x ** 2 + pt.y ** 2 == 1
    assert pt.residual(2) == 0


def test_pythagorean_lowest_terms():
    for u in range(2, 15):
        for v in range(1, u):
            pt = pythagorean_point(u, v)
            assert pt.x ** 2 + pt.y ** 2 == 1
            if math.gcd(u, v) == 1 and (u - v) % 2 == 1:
                assert pt.x.denominator == u * u + v * v
                assert pt.y.denominator == u * u + v * v


def test_pythagorean_arguments():
    for u, v in ((1, 1), (1, 2), (2, 0), (2.0, 1)):
        with pytest.raises(ArgumentError):
            pythagorean_point(u, v)


@pytest.mark.parametrize("p", [3, 4, 5, 7])
def test_classification_fermat(p):
    report = rational_point_classification(p)
    assert report.kind is PointKind.TRIVIAL
    assert report.finite
    assert report.justification == "Fermat's Last Theorem"
    assert len(report.points) == 4
    assert all(pt.residual(p) == 0 for pt in report.points)


def test_classification_infinite_families():
    circle = rational_point_classification(2)
    assert circle.kind is PointKind.PYTHAGOREAN and not circle.finite
    samples = circle.samples(5)
    assert samples[0].x == Fraction(3, 5) and samples[0].y == Fraction(4, 5)
    assert all(pt.residual(2) == 0 for pt in samples)

    line = rational_point_classification(1)
    assert line.kind is PointKind.DENSE
    dense = line.samples(10)
    assert any(pt.x == Fraction(1, 3) and pt.y == Fraction(2, 3) for pt in dense)
    assert all(pt.residual(1) == 0 for pt in dense)
    assert len(line.to_dict(sample_count=4)["points"]) == 4


def test_classification_arguments():
    assert rational_point_classification(4.0).p == 4
    for bad in (2.5, 0, "3", True):
        with pytest.raises(ArgumentError):
            rational_point_classification(bad)


def test_p_norm_and_parallelogram():
    assert p_norm(3.0, 4.0, 2) == pytest.approx(5.0)
    assert p_norm(-1.0, 1.0, 1) == pytest.approx(2.0)
    assert parallelogram_defect((0.3, -1.2), (2.0, 0.7), 2) == pytest.approx(0.0, abs=1e-12)
    for p in (1.5, 3, 4):
        expected = 2.0 ** (1.0 + 2.0 / p) - 4.0
        assert parallelogram_defect((1.0, 0.0), (0.0, 1.0), p) == pytest.approx(expected, rel=1e-12)
