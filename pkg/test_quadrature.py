#!/usr/bin/env python3
"""
Tanh-sinh quadrature tests
"""

import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from squigonometry import AccuracyError, QuadratureConfig, tanh_sinh
from squigonometry.quadrature import H0, level_nodes


def test_polynomial():
    res = tanh_sinh(lambda x: x * x, 0.0, 1.0)
    assert res.value == pytest.approx(1 / 3, rel=1e-12)
    assert res.error >= 0.0


def test_endpoint_singularity():
    """1/sqrt(x) is integrable at 0 and never sampled there"""
    res = tanh_sinh(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0)
    assert res.value == pytest.approx(2.0, rel=1e-10)


def test_both_endpoints_singular():
    res = tanh_sinh(lambda x: 1.0 / math.sqrt(1.0 - x * x), -1.0, 1.0)
    assert res.value == pytest.approx(math.pi, rel=1e-10)


def test_orientation_and_empty_interval():
    assert tanh_sinh(math.exp, 1.0, 0.0).value == pytest.approx(-(math.e - 1.0), rel=1e-12)
    assert tanh_sinh(math.exp, 0.5, 0.5).value == 0.0


def test_non_convergence_carries_estimate():
    cfg = QuadratureConfig(tol=1e-14, max_levels=3)
    with pytest.raises(AccuracyError) as excinfo:
        tanh_sinh(lambda x: math.cos(300.0 * x), 0.0, 1.0, cfg)
    assert excinfo.value.best_estimate is not None
    assert excinfo.value.exit_code == 4


def test_node_weights_sum_to_interval_length():
    level = 4
    h = H0 / 2 ** level
    nodes = [node for lvl in range(level + 1) for node in level_nodes(lvl)]
    assert sum(w for _, _, w in nodes) * h == pytest.approx(2.0, rel=1e-10)
    assert all(side in (-1, 0, 1) and 0.0 < d <= 1.0 for side, d, _ in nodes)
    assert tanh_sinh(lambda x: 1.0, -1.0, 1.0).value == pytest.approx(2.0, rel=1e-12)
