import math

import numpy as np
import pytest

import oracles as O
from minkowski2d import (
    GeometryError,
    NormedPlane,
    UnitBallSpec,
    antinorm_eval,
    antinorm_plane,
    ball_area,
    birkhoff_orthogonal,
    is_radon,
    lp_plane,
    norm_eval,
    polygon_plane,
    radon_normalize,
    regular_polygon,
    symplectic,
)
from minkowski2d.norm_core import antinorm_ratio_spread, boundary_tangents


def test_euclidean_norm(euclid):
    assert norm_eval(euclid, [3.0, 4.0]) == pytest.approx(5.0, rel=1e-15)


def test_hexagon_norm_matches_lp_oracle(hexagon):
    assert norm_eval(hexagon, [0.0, 1.0]) == pytest.approx(O.HEXAGON_NORM_E2, rel=1e-14)
    rng = np.random.default_rng(1)
    V = regular_polygon(6)
    for v in rng.normal(size=(20, 2)):
        assert norm_eval(hexagon, v) == pytest.approx(O.gauge_lp(V, v), rel=1e-8)


def test_square_and_l1_norms(square, l1):
    v = np.array([0.3, -1.7])
    assert norm_eval(square, v) == pytest.approx(1.7, rel=1e-15)
    assert norm_eval(l1, v) == pytest.approx(2.0, rel=1e-15)


def test_batch_and_single(l4):
    V = np.array([[1.0, 2.0], [-3.0, 0.5]])
    out = norm_eval(l4, V)
    assert out.shape == (2,)
    assert out[1] == pytest.approx(O.lp_norm(4, V[1]), rel=1e-14)
    assert isinstance(norm_eval(l4, V[0]), float)


def test_symplectic_scales_with_c(euclid):
    assert symplectic(euclid, [1, 0], [0, 1]) == 1.0
    assert symplectic(euclid.with_scale(2.5), [1, 0], [0, 1]) == 2.5


def test_antinorm_square_is_l1(square):
    v = np.array([0.4, -2.0])
    assert antinorm_eval(square, v) == pytest.approx(2.4, rel=1e-15)
    assert antinorm_eval(square, v) == pytest.approx(O.antinorm_vertices([(1, 1), (-1, 1), (-1, -1), (1, -1)], v))


def test_antinorm_lp_is_dual_norm(l4):
    v = np.array([0.7, 0.2])
    # sup det(x, v) over the l4 ball = ||(v2, -v1)||_{4/3}
    assert antinorm_eval(l4, v) == pytest.approx(O.lp_norm(4 / 3, [v[1], -v[0]]), rel=1e-12)


def test_euclidean_antinorm_equals_norm(euclid):
    v = np.array([1.3, -0.4])
    assert antinorm_eval(euclid, v) == pytest.approx(norm_eval(euclid, v), rel=1e-13)


@pytest.mark.parametrize("name", ["square", "l4", "hexagon", "glue3"])
def test_double_antinorm(name, request):
    plane = request.getfixturevalue(name)
    aa = antinorm_plane(antinorm_plane(plane))
    t = 2 * np.pi * np.arange(36) / 36
    E = np.column_stack([np.cos(t), np.sin(t)])
    assert np.allclose(norm_eval(aa, E), norm_eval(plane, E), rtol=1e-10)


def test_birkhoff_examples(euclid, square):
    assert birkhoff_orthogonal(euclid, [1, 0], [0, 1])
    assert not birkhoff_orthogonal(euclid, [1, 0], [1, 1])
    assert birkhoff_orthogonal(square, [1, 0], [0, 1])
    # (1, 0.5) lies on the square's right edge, so the edge direction is orthogonal ...
    assert birkhoff_orthogonal(square, [1, 0.5], [0, 1])
    # ... but (1,0) is not orthogonal to (1,1) in the square norm
    assert not birkhoff_orthogonal(square, [1, 0], [1, 1])


def test_birkhoff_matches_scan(l4):
    v, w = np.array([0.6, 0.8]), np.array([-0.8, 0.6])
    gap = O.birkhoff_scan(lambda x: O.lp_norm(4, x), v, w)
    assert birkhoff_orthogonal(l4, v, w) == (gap >= -1e-9)


def test_birkhoff_rejects_zero(euclid):
    with pytest.raises(GeometryError):
        birkhoff_orthogonal(euclid, [0, 0], [1, 0])


def test_is_radon(euclid, square, hexagon, l4, glue3):
    assert is_radon(euclid).radon
    assert is_radon(hexagon).radon
    assert is_radon(glue3).radon
    r = is_radon(square)
    assert not r.radon and r.witness is not None
    assert not is_radon(l4).radon


def test_radon_normalize_scales_omega(euclid):
    p = radon_normalize(euclid.with_scale(3.0))
    assert p.omega_scale == pytest.approx(1.0, rel=1e-12)
    hexn = radon_normalize(polygon_plane(regular_polygon(6)))
    spread, ratios = antinorm_ratio_spread(hexn, 90)
    assert np.allclose(ratios, 1.0, atol=1e-12)


def test_radon_normalize_rejects_square(square):
    with pytest.raises(GeometryError):
        radon_normalize(square)


def test_ball_area(euclid, l4, square):
    assert ball_area(euclid) == pytest.approx(math.pi, rel=1e-14)
    assert ball_area(l4) == pytest.approx(O.L4_AREA, rel=1e-14)
    assert ball_area(square.with_scale(0.5)) == pytest.approx(2.0)


def test_plane_validation():
    with pytest.raises(GeometryError):
        NormedPlane(UnitBallSpec.lp(2.0), 0.0)
    with pytest.raises(GeometryError):
        polygon_plane([(1, 0), (0, 1), (-1, 0), (0, -2)])  # asymmetric list gets mirrored into a non-convex one
    with pytest.raises(GeometryError):
        lp_plane(0.5).geometry


def test_half_polygon_is_completed():
    half = polygon_plane([(1, 0), (0.5, 1), (-0.5, 1)])
    full = polygon_plane([(1, 0), (0.5, 1), (-0.5, 1), (-1, 0), (-0.5, -1), (0.5, -1)])
    t = np.linspace(0, 2 * np.pi, 50)
    E = np.column_stack([np.cos(t), np.sin(t)])
    assert np.allclose(norm_eval(half, E), norm_eval(full, E), rtol=1e-14)


def test_spec_roundtrip(glue3, l4):
    for plane in (glue3, l4, lp_plane(math.inf)):
        again = NormedPlane.from_dict(plane.to_dict())
        assert again.fingerprint() == plane.fingerprint()


def test_boundary_tangents_forward_on_square(square):
    t = boundary_tangents(square, np.array([[1.0, 1.0], [1.0, 0.0]]))
    assert np.allclose(t[0], [-1.0, 0.0])  # corner: forward edge goes left
    assert np.allclose(t[1], [0.0, 1.0])


def test_support_samples_ball():
    t = 2 * np.pi * np.arange(256) / 256
    spec = UnitBallSpec.support_samples(t, np.ones_like(t))
    p = NormedPlane(spec, 1.0)
    assert norm_eval(p, [1.0, 0.0]) == pytest.approx(1.0, abs=1e-3)
    assert not p.geometry.exact
