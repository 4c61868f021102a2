"""The frozen constants in ``oracles`` reproduce from the oracles themselves."""

import math

import numpy as np
import pytest

import oracles as O


def test_frozen_lengths_reproduce():
    assert O.lp_circle_length(4) == pytest.approx(O.L4_CIRCLE_LENGTH, rel=1e-10)
    assert O.lp_circle_length(3) == pytest.approx(O.L3_CIRCLE_LENGTH, rel=1e-10)
    assert O.ellipse_perimeter(1, 0.5) == pytest.approx(O.ELLIPSE_1_05_PERIMETER, rel=1e-14)
    assert O.lp_area(4) == pytest.approx(O.L4_AREA, rel=1e-14)
    assert O.lp_circle_length(4, 4 / 3) == pytest.approx(O.L4_ANTINORM_CIRCLE_LENGTH, rel=1e-10)


def test_oracle_self_consistency():
    # Euclidean special cases
    assert O.lp_circle_length(2) == pytest.approx(2 * math.pi, rel=1e-12)
    assert O.lp_area(2) == pytest.approx(math.pi, rel=1e-14)
    # l_p and its dual exponent have the same circle length
    assert O.lp_circle_length(1.5) == pytest.approx(O.lp_circle_length(3), rel=1e-10)
    # anti-norm length of the l4 circle is twice its area
    assert O.L4_ANTINORM_CIRCLE_LENGTH == pytest.approx(2 * O.L4_AREA, rel=1e-10)


def test_lp_gauge_oracle_on_hexagon():
    t = 2 * np.pi * np.arange(6) / 6
    V = np.column_stack([np.cos(t), np.sin(t)])
    assert O.gauge_lp(V, [0.0, 1.0]) == pytest.approx(O.HEXAGON_NORM_E2, rel=1e-9)
    assert O.gauge_lp(V, [1.0, 0.0]) == pytest.approx(1.0, rel=1e-9)
