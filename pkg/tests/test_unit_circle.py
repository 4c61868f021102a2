import io
import math

import numpy as np
import pytest

import oracles as O
from minkowski2d import (
    GeometryError,
    ball_area,
    circle_perimeter,
    circle_perimeter_antinorm,
    kepler_deviation,
    kepler_integral,
    named_plane,
    parametrize_unit_circle,
    radon_normalize,
)
from minkowski2d.unit_circle import export_path_csv


def test_euclidean_length(euclid):
    assert circle_perimeter(euclid) == pytest.approx(2 * math.pi, rel=1e-8)


def test_polygon_lengths_exact(square, hexagon, l1):
    assert circle_perimeter(square) == 8.0
    assert circle_perimeter(l1) == 8.0
    assert circle_perimeter(hexagon) == pytest.approx(6.0, rel=1e-15)


def test_lp_lengths_against_quadrature(l4):
    assert circle_perimeter(l4) == pytest.approx(O.L4_CIRCLE_LENGTH, rel=1e-7)
    assert circle_perimeter(named_plane("lp:3")) == pytest.approx(O.L3_CIRCLE_LENGTH, rel=1e-7)


def test_antinorm_length_is_twice_area(l4, square):
    assert circle_perimeter_antinorm(l4) == pytest.approx(O.L4_ANTINORM_CIRCLE_LENGTH, rel=1e-7)
    assert circle_perimeter_antinorm(square) == pytest.approx(2 * ball_area(square), rel=1e-14)


def test_path_grid(l4):
    path = parametrize_unit_circle(l4, 256)
    assert path.n == 256
    assert np.allclose(path.points[0], [1.0, 0.0])
    g = l4.geometry
    assert np.allclose(g.gauge(path.points), 1.0, atol=1e-13)
    assert np.allclose(g.gauge(path.tangents), 1.0, atol=1e-13)
    # the grid is equally spaced in norm arc length: chords fall short of the
    # step only by the second-order curvature defect
    step = path.total_length / path.n
    chords = g.gauge(np.diff(np.vstack([path.points, path.points[:1]]), axis=0))
    assert np.all(chords <= step * (1 + 1e-4))
    assert np.all(chords >= step * (1 - 2e-3))


def test_path_requires_resolution(euclid):
    with pytest.raises(GeometryError):
        parametrize_unit_circle(euclid, 16)


def test_kepler_radon(euclid, hexagon, glue3):
    for plane in (euclid, radon_normalize(hexagon), glue3):
        path = parametrize_unit_circle(plane)
        assert kepler_deviation(plane, path) <= 1e-4
        assert kepler_integral(plane, path) == pytest.approx(2 * ball_area(plane), rel=1e-3)


def test_kepler_integral_holds_without_radon(l4, square):
    # omega(phi, phi') is not constant on l4, but its integral is still twice the omega-area
    path = parametrize_unit_circle(l4)
    assert kepler_deviation(l4, path) > 1e-2
    assert kepler_integral(l4, path) == pytest.approx(2 * ball_area(l4), rel=1e-6)
    # on a polygon omega(phi, phi') is constant along each edge; the square is
    # the degenerate case where every edge gives the same value
    path = parametrize_unit_circle(square)
    assert kepler_deviation(square, path) == 0.0
    assert kepler_integral(square, path) == 2 * ball_area(square)


def test_kepler_unnormalized_hexagon(hexagon):
    path = parametrize_unit_circle(hexagon)
    assert kepler_deviation(hexagon, path) == pytest.approx(1 - math.sqrt(3) / 2, rel=1e-12)
    assert kepler_integral(hexagon, path) == pytest.approx(2 * ball_area(hexagon), rel=1e-12)


def test_kepler_wrong_plane(euclid, l4):
    path = parametrize_unit_circle(l4, 64)
    with pytest.raises(GeometryError):
        kepler_deviation(euclid, path)


def test_evaluate_wraps(l4):
    path = parametrize_unit_circle(l4, 128)
    L = path.total_length
    a, ta = path.evaluate([0.3])
    b, tb = path.evaluate([0.3 + L])
    assert np.allclose(a, b) and np.allclose(ta, tb)


def test_csv_export(hexagon):
    path = parametrize_unit_circle(hexagon, 64)
    buf = io.StringIO()
    export_path_csv(path, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0].startswith("# total_length=")
    assert lines[1] == "u,x,y,dx,dy"
    assert len(lines) == 2 + 64
    first = [float(x) for x in lines[2].split(",")]
    assert first[0] == 0.0 and first[1] == pytest.approx(1.0)
