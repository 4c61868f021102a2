"""Closed convex curves in a normed plane: lengths, diameter, support, widths, curvature."""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .norm_core import (
    SMOOTH_MAX_EDGE,
    SMOOTH_MAX_TURN,
    TWO_PI,
    GeometryError,
    NormedPlane,
    _as_points,
    _unwrapped,
    antinorm_eval,
    canonical_polygon,
    check_convex_ccw,
    cross,
    rot_minus90,
    shoelace,
    support_samples_polygon,
)
from .unit_circle import DEFAULT_N, ArcLengthPath, parametrize_unit_circle

CW_TOL = 1e-3
WIDTH_DIRS = 720


def _is_dense_smooth(P) -> bool:
    E = np.roll(P, -1, axis=0) - P
    e_prev = P - np.roll(P, 1, axis=0)
    turn = np.arctan2(cross(e_prev, E), np.sum(e_prev * E, axis=1))
    elen = np.hypot(E[:, 0], E[:, 1])
    scale = math.sqrt(abs(shoelace(P)) / math.pi)
    return bool(turn.max() <= SMOOTH_MAX_TURN and elen.max() <= SMOOTH_MAX_EDGE * scale)


@dataclass(frozen=True, eq=False)
class ConvexCurve:
    """Closed convex polygonal curve, counterclockwise, origin in the interior.

    ``offset`` is the translation that was subtracted on ingestion (zero when
    the input already surrounded the origin); ``points`` are in the
    translated frame. ``source`` is the JSON description the curve came from.
    """

    points: np.ndarray
    offset: np.ndarray = field(default_factory=lambda: np.zeros(2))
    source: dict | None = None

    @classmethod
    def from_points(cls, pts, source: dict | None = None) -> "ConvexCurve":
        P = _as_points(pts)
        if shoelace(P) < 0:
            P = P[::-1]
        P = canonical_polygon(P)
        check_convex_ccw(P, "curve")
        offset = np.zeros(2)
        if np.any(cross(P, np.roll(P, -1, axis=0)) <= 0):
            offset = polygon_centroid(P)
            P = P - offset
        return cls(np.ascontiguousarray(P), offset, source)

    @property
    def smooth(self) -> bool:
        return _is_dense_smooth(self.points)

    @cached_property
    def normal_angles(self) -> np.ndarray:
        E = np.roll(self.points, -1, axis=0) - self.points
        N = rot_minus90(E)
        return np.ascontiguousarray(_unwrapped(np.arctan2(N[:, 1], N[:, 0])))

    def support(self, dirs):
        """Euclidean support function and supporting vertex index."""
        dirs = np.ascontiguousarray(dirs, dtype=float).reshape(-1, 2)
        return kernels.polygon_support(self.normal_angles, self.points, dirs)

    def edges(self) -> np.ndarray:
        return np.roll(self.points, -1, axis=0) - self.points

    def fingerprint(self) -> str:
        if self.source is not None:
            blob = json.dumps(self.source, sort_keys=True).encode()
        else:
            blob = np.round(self.points + self.offset, 12).tobytes()
        return hashlib.sha256(blob).hexdigest()[:12]

    def translated(self, t) -> "ConvexCurve":
        return ConvexCurve.from_points(self.points + self.offset + np.asarray(t, dtype=float))

    def scaled(self, s: float) -> "ConvexCurve":
        return ConvexCurve.from_points(s * (self.points + self.offset))

    def to_dict(self) -> dict:
        if self.source is not None:
            return self.source
        return {"type": "polyline", "points": (self.points + self.offset).tolist()}


def polygon_centroid(P) -> np.ndarray:
    Q = np.roll(P, -1, axis=0)
    c = cross(P, Q)
    a = 0.5 * c.sum()
    return np.array([np.sum((P[:, 0] + Q[:, 0]) * c), np.sum((P[:, 1] + Q[:, 1]) * c)]) / (6.0 * a)


# -- built-in curves -------------------------------------------------------------


def circle(r: float = 1.0, n: int = DEFAULT_N, center=(0.0, 0.0)) -> ConvexCurve:
    t = TWO_PI * np.arange(n) / n
    P = np.column_stack([r * np.cos(t), r * np.sin(t)]) + np.asarray(center, dtype=float)
    return ConvexCurve.from_points(P, {"type": "builtin", "name": "circle", "params": {"r": r, "n": n, "center": list(center)}})


def ellipse(a: float = 1.0, b: float = 0.5, n: int = DEFAULT_N, angle: float = 0.0) -> ConvexCurve:
    t = TWO_PI * np.arange(n) / n
    P = np.column_stack([a * np.cos(t), b * np.sin(t)])
    c, s = math.cos(angle), math.sin(angle)
    P = P @ np.array([[c, s], [-s, c]])
    return ConvexCurve.from_points(P, {"type": "builtin", "name": "ellipse", "params": {"a": a, "b": b, "n": n, "angle": angle}})


def reuleaux_triangle(width: float = 1.0, n: int = DEFAULT_N) -> ConvexCurve:
    """Euclidean Reuleaux triangle of the given width centred at its centroid."""
    k = max(n // 3, 2)
    R = width / math.sqrt(3.0)
    verts = [R * np.array([math.cos(math.pi / 2 + 2 * math.pi * i / 3), math.sin(math.pi / 2 + 2 * math.pi * i / 3)]) for i in range(3)]
    pts = []
    for i in range(3):
        centre = verts[i]
        a = verts[(i + 1) % 3] - centre
        start = math.atan2(a[1], a[0])
        t = start + (math.pi / 3) * np.arange(k) / k
        pts.append(centre + width * np.column_stack([np.cos(t), np.sin(t)]))
    return ConvexCurve.from_points(np.vstack(pts), {"type": "builtin", "name": "reuleaux_triangle", "params": {"width": width, "n": n}})


def regular_polygon_curve(k: int, circumradius: float = 1.0, phase: float = 0.0) -> ConvexCurve:
    t = phase + TWO_PI * np.arange(k) / k
    P = circumradius * np.column_stack([np.cos(t), np.sin(t)])
    return ConvexCurve.from_points(P, {"type": "builtin", "name": "regular_polygon", "params": {"k": k, "r": circumradius, "phase": phase}})


def unit_circle_curve(plane: NormedPlane, n: int = DEFAULT_N, radius: float = 1.0) -> ConvexCurve:
    """The plane's own unit circle (scaled by ``radius``) as a curve."""
    path = parametrize_unit_circle(plane, n)
    src = {"type": "builtin", "name": "unit_circle", "params": {"n": n, "radius": radius, "plane": plane.fingerprint()}}
    P = path.dense if path.polygonal else path.points
    return ConvexCurve.from_points(radius * P, src)


def support_fn_curve(angles, values) -> ConvexCurve:
    """Curve bounding ``{x : <x, e(theta_i)> <= h_i}`` (no symmetrization)."""
    from scipy.spatial import ConvexHull, HalfspaceIntersection

    ang = np.asarray(angles, dtype=float)
    val = np.asarray(values, dtype=float)
    hs = np.column_stack([np.cos(ang), np.sin(ang), -val])
    if np.all(val > 0):
        interior = np.zeros(2)
    else:
        from scipy.optimize import linprog

        # Chebyshev centre
        norms = np.ones(len(ang))
        res = linprog([0, 0, -1], A_ub=np.column_stack([hs[:, :2], norms]), b_ub=val, bounds=[(None, None)] * 2 + [(0, None)])
        if not res.success or res.x[2] <= 0:
            raise GeometryError("support samples do not bound a body with interior")
        interior = res.x[:2]
    inter = HalfspaceIntersection(hs, interior)
    hull = ConvexHull(inter.intersections)
    src = {"type": "support_fn", "angles": ang.tolist(), "values": val.tolist()}
    return ConvexCurve.from_points(inter.intersections[hull.vertices], src)


def curve_from_dict(d: dict, plane: NormedPlane | None = None, n: int = DEFAULT_N) -> ConvexCurve:
    kind = d.get("type")
    if kind == "polyline":
        return ConvexCurve.from_points(d["points"], d)
    if kind == "support_fn":
        return support_fn_curve(d["angles"], d["values"])
    if kind == "builtin":
        name = d["name"]
        params = dict(d.get("params", {}))
        if name == "unit_circle":
            if plane is None:
                raise GeometryError("builtin unit_circle needs a plane")
            return unit_circle_curve(plane, int(params.get("n", n)), float(params.get("radius", 1.0)))
        if name == "circle":
            return circle(float(params.get("r", 1.0)), int(params.get("n", n)), params.get("center", (0.0, 0.0)))
        if name == "ellipse":
            return ellipse(float(params.get("a", 1.0)), float(params.get("b", 0.5)), int(params.get("n", n)), float(params.get("angle", 0.0)))
        if name == "reuleaux_triangle":
            return reuleaux_triangle(float(params.get("width", 1.0)), int(params.get("n", n)))
        if name == "regular_polygon":
            return regular_polygon_curve(int(params["k"]), float(params.get("r", 1.0)), float(params.get("phase", 0.0)))
        raise GeometryError(f"unknown builtin curve {name!r}")
    if kind == "constant_width":
        from .constructors import WidthSynthesisSpec, build_constant_width_curve

        if plane is None:
            raise GeometryError("constant_width curves need a plane")
        return build_constant_width_curve(plane, WidthSynthesisSpec.from_dict(d))
    if kind == "perturbed_circle":
        from .constructors import perturbed_unit_circle

        if plane is None:
            raise GeometryError("perturbed_circle curves need a plane")
        return perturbed_unit_circle(plane, [tuple(h) for h in d["harmonics"]], float(d["r0"]), int(d.get("n", n)))
    raise GeometryError(f"unknown curve type {kind!r}")


# -- metric quantities -----------------------------------------------------------


def curve_length(plane: NormedPlane, curve: ConvexCurve) -> float:
    """Sum of the norms of the edges (the sup over partitions for a polyline)."""
    return float(np.sum(plane.geometry.gauge(curve.edges())))


def curve_length_antinorm(plane: NormedPlane, curve: ConvexCurve) -> float:
    return float(np.sum(antinorm_eval(plane, curve.edges())))


def diameter(plane: NormedPlane, curve: ConvexCurve):
    """All-pairs maximum of ``||x - y||`` over the vertices; returns ``(d, (x, y))``."""
    val, i, j = plane.geometry.max_pair(curve.points)
    P = curve.points + curve.offset
    return float(val), (P[i].copy(), P[j].copy())


def _grid(path: ArcLengthPath, u):
    if u is None:
        return path.points, path.tangents, False
    pts, tans = path.evaluate(u)
    return pts, tans, np.ndim(u) == 0


def support_points(plane: NormedPlane, curve: ConvexCurve, path: ArcLengthPath, u=None):
    """Points ``gamma(u)`` of the curve whose support line has direction ``phi'(u)``."""
    _, tans, single = _grid(path, u)
    _, idx = curve.support(rot_minus90(tans))
    out = curve.points[idx]
    return out[0] if single else out


def minkowski_support(plane: NormedPlane, curve: ConvexCurve, path: ArcLengthPath, u=None):
    """Norm distance from the origin to the support line with direction ``phi'(u)``.

    Equals ``omega(gamma, phi') / omega(phi, phi')``; computed as the ratio of
    the Euclidean support functions of the curve and of the unit ball in the
    outward normal direction. ``u=None`` evaluates on the path grid.
    """
    pts, tans, single = _grid(path, u)
    N = rot_minus90(tans)
    hK, _ = curve.support(N)
    h = hK / np.sum(pts * N, axis=1)
    return float(h[0]) if single else h


def support_decomposition_residual(plane: NormedPlane, curve: ConvexCurve, path: ArcLengthPath) -> float:
    """Max Euclidean error of rebuilding ``gamma`` from its moving-basis coefficients."""
    phi, dphi = path.points, path.tangents
    g = support_points(plane, curve, path)
    c = plane.omega_scale
    w_pp = c * cross(phi, dphi)
    a = c * cross(g, dphi) / w_pp
    b = c * cross(g, phi) / w_pp
    rec = a[:, None] * phi - b[:, None] * dphi
    return float(np.max(np.hypot(*(rec - g).T)))


def support_integral(plane: NormedPlane, curve: ConvexCurve, path: ArcLengthPath, weight=None) -> float:
    """``int_0^L w(u) h(u) du`` by the periodic rectangle rule (``w = 1`` by default)."""
    h = minkowski_support(plane, curve, path)
    if weight is not None:
        h = h * weight
    return float(np.sum(h) * path.total_length / path.n)


def width_in_direction(plane: NormedPlane, curve: ConvexCurve, v):
    """Norm distance between the two support lines with Euclidean normal ``+-v``."""
    V = np.asarray(v, dtype=float)
    single = V.ndim == 1
    V = V.reshape(-1, 2)
    if np.any(np.all(V == 0, axis=1)):
        raise GeometryError("width direction must be non-zero")
    hp, _ = curve.support(V)
    hm, _ = curve.support(-V)
    w = (hp + hm) / plane.geometry.support(V)
    return float(w[0]) if single else w


def width_profile(plane: NormedPlane, curve: ConvexCurve, n_dirs: int = WIDTH_DIRS) -> np.ndarray:
    theta = math.pi * np.arange(n_dirs) / n_dirs
    return width_in_direction(plane, curve, np.column_stack([np.cos(theta), np.sin(theta)]))


def is_constant_width(plane: NormedPlane, curve: ConvexCurve, tol: float = CW_TOL, n_dirs: int = WIDTH_DIRS):
    """``(max - min < tol * mean, mean)`` over a sweep of Euclidean normal directions."""
    w = width_profile(plane, curve, n_dirs)
    mean = float(w.mean())
    return bool(w.max() - w.min() < tol * mean), mean


def support_widths(plane: NormedPlane, curve: ConvexCurve, path: ArcLengthPath) -> np.ndarray:
    """``h(u) + h(u + L/2)`` for ``u`` on the first half of the grid."""
    n = path.n
    if n % 2:
        raise GeometryError("support widths need an even path resolution")
    h = minkowski_support(plane, curve, path)
    return h[: n // 2] + h[n // 2 :]


def is_constant_width_by_support(plane: NormedPlane, curve: ConvexCurve, path: ArcLengthPath, tol: float = CW_TOL):
    w = support_widths(plane, curve, path)
    mean = float(w.mean())
    return bool(w.max() - w.min() < tol * mean), mean


# -- circular curvature ---------------------------------------------------------


def require_smooth(plane: NormedPlane, curve: ConvexCurve | None = None) -> None:
    if not plane.geometry.smooth:
        raise GeometryError("unit circle is not smooth and strictly convex; apply smooth_approximate first")
    if curve is not None and not curve.smooth:
        raise GeometryError("curve is polygonal or has corners; apply smooth_approximate first")


class CurvatureTable:
    """Monotone correspondence ``s -> t(s)`` between curve arc length and the
    unit-circle parameter with the same tangent direction."""

    def __init__(self, plane: NormedPlane, curve: ConvexCurve, path: ArcLengthPath):
        require_smooth(plane, curve)
        E = curve.edges()
        ell = plane.geometry.gauge(E)
        S = np.concatenate([[0.0], np.cumsum(ell)])
        self.length = float(S[-1])
        self.L = path.total_length
        s_mid = S[:-1] + 0.5 * ell
        t = path.parameter_for_direction(np.arctan2(E[:, 1], E[:, 0]))
        # unwrap so t increases along the curve
        t = np.concatenate([[t[0]], t[0] + np.cumsum(np.mod(np.diff(t), self.L))])
        self.s = s_mid
        self.t = t
        self.h = self.length / len(ell)

    def t_of_s(self, s):
        s = np.asarray(s, dtype=float)
        k = np.floor((s - self.s[0]) / self.length)
        x = s - k * self.length
        s_ext = np.concatenate([self.s - self.length, self.s, self.s + self.length])
        t_ext = np.concatenate([self.t - self.L, self.t, self.t + self.L])
        return np.interp(x, s_ext, t_ext) + k * self.L

    def s_of_t(self, t):
        t = np.asarray(t, dtype=float)
        k = np.floor((t - self.t[0]) / self.L)
        x = t - k * self.L
        s_ext = np.concatenate([self.s - self.length, self.s, self.s + self.length])
        t_ext = np.concatenate([self.t - self.L, self.t, self.t + self.L])
        return np.interp(x, t_ext, s_ext) + k * self.length

    def dt_ds(self, s, step: float | None = None):
        H = step if step is not None else 4.0 * self.h

        def central(hh):
            return (self.t_of_s(s + hh) - self.t_of_s(s - hh)) / (2.0 * hh)

        return (4.0 * central(H) - central(2.0 * H)) / 3.0


def circular_curvature(plane: NormedPlane, curve: ConvexCurve, path: ArcLengthPath, s):
    """Circular curvature ``k = dt/ds`` and radius ``rho = 1/k`` at arc length ``s``.

    ``s`` is measured in the norm from the curve's first vertex. Returns
    ``(k, rho)``; ``rho`` is ``inf`` where ``k`` is numerically zero.
    """
    table = CurvatureTable(plane, curve, path)
    s = np.asarray(s, dtype=float)
    k = table.dt_ds(s)
    with np.errstate(divide="ignore"):
        rho = np.where(np.abs(k) > 1e-12, 1.0 / np.where(k == 0, 1.0, k), np.inf)
    if np.ndim(s) == 0:
        return float(k), float(rho)
    return k, rho


def curvature_radius_sums(plane: NormedPlane, curve: ConvexCurve, path: ArcLengthPath, n_pairs: int = 256):
    """``rho(s0) + rho(s1)`` where the support lines at ``s0``, ``s1`` are parallel."""
    table = CurvatureTable(plane, curve, path)
    L = path.total_length
    u = 0.5 * L * np.arange(n_pairs) / n_pairs
    s0 = table.s_of_t(u + table.t[0])
    s1 = table.s_of_t(u + table.t[0] + 0.5 * L)
    return 1.0 / table.dt_ds(s0) + 1.0 / table.dt_ds(s1)
