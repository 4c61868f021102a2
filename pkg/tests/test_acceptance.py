"""Acceptance criteria, each at its stated tolerance.

Every test records one PASS/FAIL line (shown in the terminal summary) and
then asserts the same condition.
"""

import itertools
import math
import time

import numpy as np
import pytest

import corpus
import oracles as O
from minkowski2d import (
    antinorm_eval,
    antinorm_plane,
    ball_area,
    diameter,
    is_constant_width,
    kepler_deviation,
    kepler_integral,
    lp_plane,
    named_plane,
    norm_eval,
    parametrize_unit_circle,
    polygon_plane,
    radon_normalize,
    regular_polygon,
    reuleaux_triangle,
    smooth_approximate,
    unit_circle_curve,
    verify_antinorm_bound,
    verify_barbier,
    verify_curvature_sum,
    verify_dual_bound,
    verify_rosenthal_szasz,
    WidthSynthesisSpec,
    build_constant_width_curve,
    curve_length,
    flat_harmonics,
    NormedPlane,
)
from minkowski2d.curves import regular_polygon_curve

RADON_PLANES = ("euclidean", "glue:3", "glue:1.5")


def test_criterion_01_euclidean_rs(acceptance, euclid):
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    curves = corpus.random_convex_curves(rng, 50)
    worst = math.inf
    for c in curves:
        rep = verify_rosenthal_szasz(euclid, c, 4096)
        worst = min(worst, rep.slack / rep.bound)
        assert rep.bound == pytest.approx(math.pi * diameter(euclid, c)[0], rel=1e-7)
    dt = time.perf_counter() - t0
    ok = worst >= -1e-4 and dt < 30.0
    acceptance(1, "Euclidean Rosenthal-Szasz", ok, f"50 curves, min slack/bound {worst:.3e}, {dt:.2f} s")
    assert ok


def test_criterion_02_barbier(acceptance, euclid, glue3):
    r = reuleaux_triangle(1.0)
    err_r = abs(curve_length(euclid, r) - math.pi) / math.pi
    path = parametrize_unit_circle(glue3)
    body = build_constant_width_curve(glue3, WidthSynthesisSpec(1.5, flat_harmonics(path, [(0.0, 1.0)], 0.04)))
    assert body.smooth
    rep = verify_barbier(glue3, body)
    err_g = abs(rep.lhs - rep.bound) / rep.bound
    ok = err_r <= 1e-3 and err_g <= 1e-3 and rep.passed
    acceptance(2, "Barbier anchor", ok, f"Reuleaux rel err {err_r:.2e}; glue(l3) body d=1.5 rel err {err_g:.2e}")
    assert ok


def test_criterion_03_equality_characterization(acceptance):
    rng = np.random.default_rng(7)
    n_cw = n_non = disagree = 0
    for k, name in enumerate(RADON_PLANES):
        plane = named_plane(name)
        for c in corpus.constant_width_curves(plane, 4, seed=k):
            rep = verify_rosenthal_szasz(plane, c)
            n_cw += 1
            disagree += rep.equality != is_constant_width(plane, c, rep.tol["equality"])[0]
            disagree += not rep.details["constant_width"]
        for c in corpus.random_convex_curves(rng, 4):
            rep = verify_rosenthal_szasz(plane, c)
            n_non += 1
            disagree += rep.equality != is_constant_width(plane, c, rep.tol["equality"])[0]
            disagree += rep.details["constant_width"]
    ok = n_cw >= 10 and n_non >= 10 and disagree == 0
    acceptance(3, "equality iff constant width", ok,
               f"{n_cw} constant-width + {n_non} other curves on {len(RADON_PLANES)} Radon planes, {disagree} disagreements")
    assert ok


def test_criterion_04_antinorm_theorem(acceptance, square, l1, l4):
    rng = np.random.default_rng(11)
    worst = math.inf
    count = 0
    for plane in (square, l1, l4):
        curves = corpus.random_convex_curves(rng, 10) + [unit_circle_curve(plane, 1024, 0.6)]
        for c in curves:
            rep = verify_antinorm_bound(plane, c)
            worst = min(worst, rep.slack / rep.bound)
            count += 1
    unit = verify_antinorm_bound(square, unit_circle_curve(square))
    eq_ok = abs(unit.lhs - 8) <= 1e-6 and abs(unit.bound - 8) <= 1e-6
    ok = worst >= -1e-4 and eq_ok
    acceptance(4, "anti-norm theorem", ok,
               f"{count} curves on square/l1/l4, min slack/bound {worst:.3e}; square unit circle lhs={unit.lhs:.9g} bound={unit.bound:.9g}")
    assert ok


def test_criterion_05_dual_corollary(acceptance, square):
    rng = np.random.default_rng(5)
    worst = 0.0
    for name in RADON_PLANES + ("hexagon",):
        plane = radon_normalize(named_plane(name))
        for c in corpus.random_convex_curves(rng, 3) + [reuleaux_triangle(1.0)]:
            a = verify_dual_bound(plane, c)
            b = verify_rosenthal_szasz(plane, c)
            worst = max(worst, abs(a.bound - b.bound) / b.bound, abs(a.lhs - b.lhs) / b.lhs)
    sq = verify_dual_bound(square, unit_circle_curve(square))
    worked = abs(sq.lhs - 8) <= 1e-6 and abs(sq.bound - 16) <= 1e-6
    ok = worst <= 1e-4 and worked
    acceptance(5, "dual corollary", ok,
               f"max rel dual-vs-Radon gap {worst:.2e} on 4 Radon planes; square lhs={sq.lhs:.9g} bound={sq.bound:.9g}")
    assert ok


def test_criterion_06_involution(acceptance, square, l4, hexagon, glue3):
    t = 2 * np.pi * np.arange(360) / 360
    E = np.column_stack([np.cos(t), np.sin(t)])
    worst = 0.0
    for plane in (square, l4, hexagon, glue3):
        aa = antinorm_plane(antinorm_plane(plane))
        worst = max(worst, float(np.max(np.abs(norm_eval(aa, E) / norm_eval(plane, E) - 1))))
    ok = worst <= 1e-4
    acceptance(6, "anti-norm involution", ok, f"square/l4/hexagon/glue(l3), 360 directions, max rel err {worst:.2e}")
    assert ok


def test_criterion_07_kepler(acceptance, hexagon):
    planes = {name: radon_normalize(named_plane(name)) for name in RADON_PLANES + ("hexagon", "poly:10")}
    planes["smoothed hexagon"] = radon_normalize(NormedPlane(smooth_approximate(hexagon.ball, 0.02), 1.0))
    dev = rel = 0.0
    for plane in planes.values():
        path = parametrize_unit_circle(plane)
        dev = max(dev, kepler_deviation(plane, path))
        rel = max(rel, abs(kepler_integral(plane, path) / (2 * ball_area(plane)) - 1))
    ok = dev <= 1e-4 and rel <= 1e-3
    acceptance(7, "Kepler law", ok, f"{len(planes)} Radon-normalized planes, max deviation {dev:.2e}, max integral rel err {rel:.2e}")
    assert ok


def test_criterion_08_curvature_sum(acceptance, euclid):
    body = build_constant_width_curve(euclid, WidthSynthesisSpec(1.0, ((3, 0.03, 0.01), (5, 0.004))))
    rep = verify_curvature_sum(euclid, body, n_pairs=256)
    ok = rep.details["n_pairs"] == 256 and rep.lhs <= 1e-2 * rep.details["width"]
    acceptance(8, "curvature-radius sum", ok, f"256 pairs, max |rho0+rho1-d| = {rep.lhs:.2e} (d={rep.details['width']:.6f})")
    assert ok


def test_criterion_09_length_bracket(acceptance, square):
    names = ["euclidean", "square", "hexagon", "lp:1", "lp:1.3", "lp:3", "lp:4", "lp:inf", "poly:8", "poly:12", "glue:3", "glue:1.5"]
    lengths = {name: parametrize_unit_circle(named_plane(name)).total_length for name in names}
    lengths["smoothed square"] = parametrize_unit_circle(NormedPlane(smooth_approximate(square.ball, 0.05), 1.0)).total_length
    lo, hi = min(lengths.values()), max(lengths.values())
    ok = lo >= 6 - 1e-3 and hi <= 8 + 1e-3
    acceptance(9, "unit-circle length bracket", ok, f"{len(lengths)} planes, l(S) in [{lo:.6f}, {hi:.6f}]")
    assert ok


def test_criterion_10_brute_force(acceptance):
    rng = np.random.default_rng(3)
    X = rng.normal(size=(200, 2))
    anti_err = 0.0
    for k in range(4, 13, 2):
        V = regular_polygon(k, 1.0, 0.3 * k)
        plane = polygon_plane(V, 1.7)
        for v in X:
            ref = O.antinorm_vertices(V, v, 1.7)
            anti_err = max(anti_err, abs(antinorm_eval(plane, v) - ref) / max(1.0, abs(ref)))
    mismatches = 0
    planes = [polygon_plane(regular_polygon(k)) for k in (4, 6, 8, 12)] + [lp_plane(4), lp_plane(1.5)]
    for plane, k in itertools.product(planes, range(3, 13)):
        c = regular_polygon_curve(k, rng.uniform(0.5, 2.0), rng.uniform(0, 1))
        d, _ = diameter(plane, c)
        ref = O.diameter_pairs(lambda w: norm_eval(plane, w), c.points)
        mismatches += d != ref
    ok = anti_err <= 1e-12 and mismatches == 0
    acceptance(10, "brute-force oracles", ok,
               f"anti-norm max err {anti_err:.1e} on k=4..12; diameter {mismatches} mismatches over {len(planes) * 10} cases")
    assert ok
