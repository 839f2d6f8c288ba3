#!/usr/bin/env python3
"""
p-trigonometric function tests: values, identities and the ODE cross-check
"""

import math
import random
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from squigonometry import (
    ArgumentError,
    DomainError,
    PoleError,
    arccos_p,
    arcsin_p,
    areal_point,
    civp_integrate,
    cos_p,
    cot_p,
    csc_p,
    double_angle_defect,
    pi_gamma,
    sec_p,
    sector_area,
    sin_p,
    tan_p,
)


def test_arcsin_examples():
    assert arcsin_p(0.0, 3) == 0.0
    assert arcsin_p(1.0, 2) == pytest.approx(math.pi / 2, rel=1e-10)
    assert arcsin_p(1.0, 4) == pytest.approx(1.854, abs=1e-3)
    assert arcsin_p(1.0, 4) == pytest.approx(pi_gamma(4) / 2, rel=1e-10)
    assert arcsin_p(0.5, 2) == pytest.approx(math.asin(0.5), rel=1e-11)
    assert arcsin_p(0.9, 2) == pytest.approx(math.asin(0.9), rel=1e-11)


def test_arccos_examples():
    assert arccos_p(1.0, 5) == 0.0
    assert arccos_p(0.0, 2) == pytest.approx(math.pi / 2, rel=1e-10)
    assert arccos_p(0.0, 4) == pytest.approx(1.854, abs=1e-3)
    assert arccos_p(0.3, 2) == pytest.approx(math.acos(0.3), rel=1e-11)


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0, 4.0, 10.0])
def test_arcsin_arccos_complement(p):
    for x in (0.0, 0.1, 0.4, 0.5, 0.6, 0.9, 0.999, 1.0):
        assert arcsin_p(x, p) + arccos_p(x, p) == pytest.approx(pi_gamma(p) / 2, rel=1e-10)


def test_inverse_domain():
    for bad in (-0.1, 1.1, float("nan")):
        with pytest.raises(DomainError):
            arcsin_p(bad, 2)
        with pytest.raises(DomainError):
            arccos_p(bad, 2)
    with pytest.raises(DomainError):
        sin_p(0.1, 0.5)


def test_sin_cos_examples():
    assert sin_p(0.0, 3) == 0.0
    assert sin_p(0.3, 1) == pytest.approx(0.3, abs=1e-12)
    assert sin_p(pi_gamma(4) / 2, 4) == 1.0
    assert cos_p(0.0, 3) == 1.0
    assert cos_p(0.3, 1) == pytest.approx(0.7, abs=1e-12)
    assert cos_p(pi_gamma(4) / 2, 4) == pytest.approx(0.0, abs=1e-12)
    assert sin_p(1.0, 2) == pytest.approx(math.sin(1.0), abs=1e-11)
    assert cos_p(2.5, 2) == pytest.approx(math.cos(2.5), abs=1e-11)
    assert sin_p(-4.0, 2) == pytest.approx(math.sin(-4.0), abs=1e-11)


def test_reciprocal_examples():
    assert tan_p(0.0, 3) == 0.0
    assert sec_p(0.0, 3) == 1.0
    assert csc_p(pi_gamma(3) / 2, 3) == 1.0
    assert tan_p(0.7, 2) == pytest.approx(math.tan(0.7), rel=1e-11)


def test_poles():
    with pytest.raises(PoleError) as excinfo:
        cot_p(0.0, 3)
    assert "cot_p" in str(excinfo.value)
    assert excinfo.value.exit_code == 5
    with pytest.raises(PoleError):
        csc_p(0.0, 2)
    with pytest.raises(PoleError):
        sec_p(pi_gamma(4) / 2, 4)
    with pytest.raises(PoleError):
        tan_p(pi_gamma(2.5) / 2, 2.5)


def test_pythagorean_identity():
    """|sin_p t|^p + |cos_p t|^p = 1 for 200 random (t, p)"""
    rng = random.Random(2024)
    for _ in range(200):
        p = rng.uniform(1.0, 10.0)
        pi_p = pi_gamma(p)
        t = rng.uniform(-3 * pi_p, 3 * pi_p)
        s, c = sin_p(t, p), cos_p(t, p)
        assert abs(s) ** p + abs(c) ** p == pytest.approx(1.0, abs=1e-9), (t, p)
        assert abs(s) <= 1.0 and abs(c) <= 1.0


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=-10.0, max_value=10.0), st.floats(min_value=1.0, max_value=6.0))
def test_parity(t, p):
    assert sin_p(-t, p) == pytest.approx(-sin_p(t, p), abs=1e-10)
    assert cos_p(-t, p) == pytest.approx(cos_p(t, p), abs=1e-10)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=-10.0, max_value=10.0), st.floats(min_value=1.0, max_value=6.0))
def test_periodicity(t, p):
    period = 2.0 * pi_gamma(p)
    assert sin_p(t + period, p) == pytest.approx(sin_p(t, p), abs=1e-10)
    assert cos_p(t + period, p) == pytest.approx(cos_p(t, p), abs=1e-10)


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0, 4.0, 7.5])
def test_inverse_round_trip(p):
    """arcsin_p(sin_p t) = t on the fundamental domain.

    Stops short of pi_p/2 where sin_p rounds to 1 in double precision; the
    endpoint itself is exact.
    """
    half_pi = pi_gamma(p) / 2
    for i in range(25):
        t = 0.95 * half_pi * i / 24
        assert arcsin_p(sin_p(t, p), p) == pytest.approx(t, abs=1e-8)
    assert arcsin_p(sin_p(half_pi, p), p) == pytest.approx(half_pi, abs=1e-8)


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0, 6.0])
def test_complement_on_fundamental_domain(p):
    half_pi = pi_gamma(p) / 2
    for i in range(21):
        t = half_pi * i / 20
        assert cos_p(t, p) == pytest.approx(sin_p(half_pi - t, p), abs=1e-9)


def test_double_angle_rigidity():
    """The double-angle formula survives only for p = 2"""
    assert double_angle_defect(2.0) < 1e-9
    for p in (1.0, 3.0, 4.0):
        assert double_angle_defect(p) > 1e-2
    with pytest.raises(ArgumentError):
        double_angle_defect(2.0, points=1)


def test_reciprocal_identities():
    for p in (1.5, 3.0, 4.0):
        for t in (0.3, 1.1, 2.0, -0.8):
            assert abs(tan_p(t, p)) ** p + 1.0 == pytest.approx(abs(sec_p(t, p)) ** p, rel=1e-9)
            assert 1.0 + abs(cot_p(t, p)) ** p == pytest.approx(abs(csc_p(t, p)) ** p, rel=1e-9)


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 5.0])
def test_small_argument_limits(p):
    x = 1e-6
    assert sin_p(x, p) / x == pytest.approx(1.0, abs=1e-6)
    assert tan_p(x, p) / x == pytest.approx(1.0, abs=1e-6)


def test_civp_examples():
    final = civp_integrate(2, math.pi / 2, 1e-4)[-1]
    assert final[0] == pytest.approx(math.pi / 2, abs=1e-15)
    assert final[1] == pytest.approx(0.0, abs=1e-8)
    assert final[2] == pytest.approx(1.0, abs=1e-8)
    assert civp_integrate(3, 0.0, 0.1) == [(0.0, 1.0, 0.0)]
    t, x, y = civp_integrate(4, 0.5, 1e-4)[-1]
    assert t == 0.5
    assert y == pytest.approx(sin_p(0.5, 4), abs=1e-6)


def test_civp_errors():
    with pytest.raises(ArgumentError):
        civp_integrate(2, 1.0, 0.0)
    with pytest.raises(ArgumentError):
        civp_integrate(2, -1.0, 0.1)
    with pytest.raises(DomainError):
        civp_integrate(2, 2.0, 0.1)


@pytest.mark.parametrize("p", [2.0, 3.0, 4.0, 7.5])
def test_quadrature_matches_ode(p):
    """Root-finding evaluation agrees with the RK4 trajectory on [0, pi_p/2]"""
    trajectory = civp_integrate(p, pi_gamma(p) / 2, 1e-3)
    for t, x, y in trajectory[::100] + [trajectory[-1]]:
        assert y == pytest.approx(sin_p(t, p), abs=1e-6)
        assert x == pytest.approx(cos_p(t, p), abs=1e-6)


def test_areal_point_examples():
    assert tuple(areal_point(0.0, 3)) == (1.0, 0.0)
    x, y = areal_point(pi_gamma(2) / 4, 2)
    assert x == pytest.approx(0.0, abs=1e-12)
    assert y == pytest.approx(1.0, abs=1e-12)
    point = areal_point(0.2, 3)
    assert sector_area(point.x, 3) == pytest.approx(0.2, abs=1e-7)
    with pytest.raises(DomainError):
        areal_point(-0.1, 3)
    with pytest.raises(DomainError):
        areal_point(pi_gamma(3), 3)


@pytest.mark.parametrize("p", [1.0, 2.0, 3.0, 5.0])
def test_sector_area_is_half_arccos(p):
    for x in (0.1, 0.5, 0.8):
        assert sector_area(x, p) == pytest.approx(0.5 * arccos_p(x, p), abs=1e-10)
