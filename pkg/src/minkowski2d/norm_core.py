"""Normed planes: unit balls, norms, anti-norms, Birkhoff orthogonality, Radon tests.

Every unit ball is lowered to one of two internal geometries: an exact
``l_p`` ball (closed-form gauge, golden-section support function) or a
centrally symmetric convex polygon (exact gauge and support function by
binary search over edges). Sampled specifications (``support_samples``,
``radon_glue``) are polygons with many vertices.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np
from scipy.spatial import ConvexHull, HalfspaceIntersection

from . import kernels

TWO_PI = 2.0 * math.pi
GOLDEN = 0.5 * (math.sqrt(5.0) - 1.0)

EXACT_TOL = 1e-9
SAMPLED_TOL = 1e-6

# a polygonal ball counts as a dense sampling of a smooth, strictly convex
# curve when no vertex turns more than this and no edge is long
SMOOTH_MAX_TURN = 0.05
SMOOTH_MAX_EDGE = 0.05


class GeometryError(ValueError):
    """Raised for invalid or degenerate geometric input."""


def _as_points(vs) -> np.ndarray:
    arr = np.asarray(vs, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GeometryError(f"expected a list of 2-vectors, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise GeometryError("non-finite coordinates")
    return arr


def cross(a, b):
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def rot90(v):
    """Counterclockwise quarter turn."""
    v = np.asarray(v, dtype=float)
    return np.stack([-v[..., 1], v[..., 0]], axis=-1)


def rot_minus90(v):
    v = np.asarray(v, dtype=float)
    return np.stack([v[..., 1], -v[..., 0]], axis=-1)


def canonical_polygon(pts, rel_tol: float = 1e-12) -> np.ndarray:
    """Drop duplicate and collinear vertices of a closed ccw polygon."""
    pts = _as_points(pts)
    scale = max(float(np.max(np.abs(pts))), 1e-300)
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        nxt = np.roll(pts, -1, axis=0)
        seg = nxt - pts
        keep = np.hypot(seg[:, 0], seg[:, 1]) > rel_tol * scale
        if not keep.all():
            pts = pts[keep]
            changed = True
            continue
        prev = np.roll(pts, 1, axis=0)
        e0 = pts - prev
        e1 = np.roll(pts, -1, axis=0) - pts
        c = cross(e0, e1)
        lens = np.hypot(e0[:, 0], e0[:, 1]) * np.hypot(e1[:, 0], e1[:, 1])
        flat = (np.abs(c) <= rel_tol * lens) & (np.sum(e0 * e1, axis=1) > 0)
        if flat.any():
            # drop one vertex per pass from each flat run to stay deterministic
            idx = np.flatnonzero(flat)
            drop = np.zeros(len(pts), dtype=bool)
            drop[idx[0]] = True
            for i in idx[1:]:
                if not drop[i - 1]:
                    drop[i] = True
            pts = pts[~drop]
            changed = True
    return pts


def check_convex_ccw(pts, what: str = "polygon") -> None:
    if len(pts) < 3:
        raise GeometryError(f"{what} needs at least 3 non-collinear vertices")
    e0 = pts - np.roll(pts, 1, axis=0)
    e1 = np.roll(pts, -1, axis=0) - pts
    c = cross(e0, e1)
    if np.any(c <= 0):
        bad = int(np.flatnonzero(c <= 0)[0])
        raise GeometryError(f"{what} is not convex counterclockwise at vertex {bad}")
    turning = np.arctan2(c, np.sum(e0 * e1, axis=1))
    if abs(turning.sum() - TWO_PI) > 1e-6:
        raise GeometryError(f"{what} winds {turning.sum() / TWO_PI:.3f} times; not simple")


def shoelace(pts) -> float:
    return 0.5 * float(np.sum(cross(pts, np.roll(pts, -1, axis=0))))


def _unwrapped(angles) -> np.ndarray:
    a = np.asarray(angles, dtype=float)
    d = np.mod(np.diff(a), TWO_PI)
    return np.concatenate([[a[0]], a[0] + np.cumsum(d)])


class BallGeometry:
    """Lowered unit ball. ``kind`` is ``"lp"`` or ``"polygon"``."""

    def __init__(self, kind, *, p=None, radius=1.0, vertices=None, exact=True):
        self.kind = kind
        self.p = p
        self.radius = float(radius)
        self.exact = exact
        if kind == "polygon":
            self._init_polygon(vertices)
        else:
            self.strictly_convex = True
            self.smooth = True

    def _init_polygon(self, vertices):
        V = canonical_polygon(vertices)
        check_convex_ccw(V, "unit ball polygon")
        if np.any(cross(V, np.roll(V, -1, axis=0)) <= 0):
            raise GeometryError("origin is not interior to the unit ball")
        ang = np.arctan2(V[:, 1], V[:, 0])
        start = int(np.argmin(ang))
        V = np.roll(V, -start, axis=0)
        self.vertices = np.ascontiguousarray(V)
        self.vertex_angles = np.ascontiguousarray(_unwrapped(np.arctan2(V[:, 1], V[:, 0])))
        E = np.roll(V, -1, axis=0) - V
        normals = rot_minus90(E)
        offsets = np.sum(normals * V, axis=1)
        self.polar = np.ascontiguousarray(normals / offsets[:, None])
        nang = np.arctan2(normals[:, 1], normals[:, 0])
        self.normal_angles = np.ascontiguousarray(_unwrapped(nang))
        e_prev = V - np.roll(V, 1, axis=0)
        turn = np.arctan2(cross(e_prev, E), np.sum(e_prev * E, axis=1))
        elen = np.hypot(E[:, 0], E[:, 1])
        rmean = float(np.mean(np.hypot(V[:, 0], V[:, 1])))
        self.max_turn = float(turn.max())
        self.smooth = bool(self.max_turn <= SMOOTH_MAX_TURN and elen.max() <= SMOOTH_MAX_EDGE * rmean)
        self.strictly_convex = self.smooth

    # -- evaluation ---------------------------------------------------------

    def gauge(self, pts) -> np.ndarray:
        pts = np.ascontiguousarray(pts, dtype=float).reshape(-1, 2)
        if self.kind == "lp":
            return kernels.lp_gauge(self.p, pts) / self.radius
        return kernels.polygon_gauge(self.vertex_angles, self.polar, pts)

    def support(self, dirs) -> np.ndarray:
        """Euclidean support function ``sup{<x, z> : x in B}``."""
        dirs = np.ascontiguousarray(dirs, dtype=float).reshape(-1, 2)
        if self.kind == "lp":
            return self.radius * kernels.lp_support(self.p, dirs)
        return kernels.polygon_support(self.normal_angles, self.vertices, dirs)[0]

    def max_pair(self, pts):
        pts = np.ascontiguousarray(pts, dtype=float)
        if self.kind == "lp":
            val, i, j = kernels.max_pair_lp(self.p, pts)
            return val / self.radius, i, j
        return kernels.max_pair_polygon(self.vertex_angles, self.polar, pts)

    def radial(self, theta) -> np.ndarray:
        e = np.stack([np.cos(theta), np.sin(theta)], axis=-1).reshape(-1, 2)
        return e / self.gauge(e)[:, None]

    def boundary(self, m: int) -> np.ndarray:
        """Counterclockwise boundary polyline starting on the positive x-axis.

        For polygons this is the exact vertex list (``m`` is ignored); for
        ``l_p`` balls it is ``m`` points equally spaced in Euclidean angle.
        """
        if self.kind == "lp":
            return self.radial(np.arange(m) * (TWO_PI / m))
        V = self.vertices
        start = self.radial(0.0)[0]
        k = int(np.searchsorted(self.vertex_angles, 0.0, side="right") - 1) % len(V)
        V = np.roll(V, -(k + 1), axis=0)  # V[-1] is the vertex at/below angle 0
        if np.hypot(*(V[-1] - start)) <= 1e-14 * self.radius_scale:
            return np.roll(V, 1, axis=0)
        return np.vstack([start, V])

    @cached_property
    def radius_scale(self) -> float:
        if self.kind == "lp":
            return self.radius * 2.0
        return float(np.max(np.hypot(self.vertices[:, 0], self.vertices[:, 1])))

    def tangent(self, pts) -> np.ndarray:
        """Exact unit-norm ccw tangents of an ``l_p`` circle at points on it."""
        pts = np.asarray(pts, dtype=float)
        p = self.p
        g = np.sign(pts) * np.abs(pts) ** (p - 1.0)
        t = rot90(g)
        return t / self.gauge(t)[:, None]

    def euclidean_area(self) -> float:
        if self.kind == "polygon":
            return shoelace(self.vertices)
        # l_p area: 4 r^2 Gamma(1+1/p)^2 / Gamma(1+2/p)
        p = self.p
        return 4.0 * self.radius ** 2 * math.gamma(1 + 1 / p) ** 2 / math.gamma(1 + 2 / p)


# -- specification types -------------------------------------------------------


def _symmetric(V, tol=1e-12) -> bool:
    scale = max(float(np.max(np.abs(V))), 1.0)
    for v in V:
        if np.min(np.hypot(*(V + v).T)) > tol * scale:
            return False
    return True


def _half_to_full(V):
    V = _as_points(V)
    if len(V) >= 3 and _symmetric(V):
        return V
    if len(V) < 2:
        raise GeometryError("half polygon needs at least 2 vertices")
    return np.vstack([V, -V])


def glue_radon_arc(arc) -> np.ndarray:
    """Close a first-quadrant arc into a Radon polygon.

    The arc (from (1,0) to (0,1)) is followed by the quarter-turned polar
    of the arc and then by the central reflection of both pieces.
    """
    A = _as_points(arc)
    if len(A) < 2:
        raise GeometryError("radon arc needs at least 2 points")
    if np.hypot(*(A[0] - (1.0, 0.0))) > 1e-12 or np.hypot(*(A[-1] - (0.0, 1.0))) > 1e-12:
        raise GeometryError("radon arc must run from (1, 0) to (0, 1)")
    A = A.copy()
    A[0] = (1.0, 0.0)
    A[-1] = (0.0, 1.0)
    if np.any(A < -1e-12) or np.any(A > 1 + 1e-12):
        raise GeometryError("radon arc must lie in the unit square of the first quadrant")
    E = np.diff(A, axis=0)
    if np.any(cross(A[:-1], A[1:]) <= 0):
        raise GeometryError("radon arc is not counterclockwise about the origin")
    if len(E) > 1:
        c = cross(E[:-1], E[1:])
        lens = np.hypot(*E[:-1].T) * np.hypot(*E[1:].T)
        if np.any(c < -1e-12 * lens):
            bad = int(np.flatnonzero(c < -1e-12 * lens)[0]) + 1
            raise GeometryError(f"radon arc is not convex at point {bad}")
    normals = rot_minus90(E)
    offsets = np.sum(normals * A[:-1], axis=1)
    polar_pts = np.vstack([[1.0, 0.0], normals / offsets[:, None], [0.0, 1.0]])
    second = rot90(polar_pts)  # runs from (0,1) to (-1,0)
    half = np.vstack([A, second[1:-1]])
    return np.vstack([half, -half])


def support_samples_polygon(angles, values) -> np.ndarray:
    ang = np.asarray(angles, dtype=float)
    val = np.asarray(values, dtype=float)
    if ang.shape != val.shape or ang.ndim != 1 or len(ang) < 2:
        raise GeometryError("support samples need matching 1-D angle/value lists")
    if np.any(np.diff(ang) <= 0) or ang[0] < 0 or ang[-1] >= TWO_PI:
        raise GeometryError("support angles must be strictly increasing in [0, 2pi)")
    if np.any(val <= 1e-9):
        raise GeometryError("support values must be bounded away from 0")
    a = np.concatenate([ang, ang + math.pi])
    h = np.concatenate([val, val])
    hs = np.column_stack([np.cos(a), np.sin(a), -h])
    try:
        inter = HalfspaceIntersection(hs, np.zeros(2))
        hull = ConvexHull(inter.intersections)
    except Exception as exc:  # qhull reports unbounded/degenerate input this way
        raise GeometryError(f"support samples do not bound a convex body: {exc}") from None
    return inter.intersections[hull.vertices]


@dataclass(frozen=True)
class UnitBallSpec:
    """Declarative origin-symmetric unit ball.

    Use the constructors :meth:`lp`, :meth:`polygon`, :meth:`support_samples`
    and :meth:`radon_glue`. ``radius`` scales an ``l_p`` ball (the anti-norm
    ball of an ``l_p`` plane is an ``l_q`` ball of radius ``1/c``).
    """

    kind: str
    p: float | None = None
    radius: float = 1.0
    vertices: tuple = ()
    angles: tuple = ()
    values: tuple = ()
    arc: tuple = ()

    @classmethod
    def lp(cls, p: float, radius: float = 1.0) -> "UnitBallSpec":
        return cls("lp", p=float(p), radius=float(radius))

    @classmethod
    def polygon(cls, vertices) -> "UnitBallSpec":
        return cls("polygon", vertices=_freeze(vertices))

    @classmethod
    def support_samples(cls, angles, values) -> "UnitBallSpec":
        return cls(
            "support_samples",
            angles=tuple(float(a) for a in angles),
            values=tuple(float(v) for v in values),
        )

    @classmethod
    def radon_glue(cls, arc) -> "UnitBallSpec":
        return cls("radon_glue", arc=_freeze(arc))

    @cached_property
    def geometry(self) -> BallGeometry:
        if self.kind == "lp":
            p = self.p
            if p is None or not (p >= 1):
                raise GeometryError(f"l_p exponent must be >= 1, got {p}")
            if not self.radius > 0:
                raise GeometryError("l_p radius must be positive")
            r = self.radius
            if p == 1:
                return BallGeometry("polygon", vertices=r * np.array([[1, 0], [0, 1], [-1, 0], [0, -1.0]]))
            if math.isinf(p):
                return BallGeometry("polygon", vertices=r * np.array([[1, 1], [-1, 1], [-1, -1], [1, -1.0]]))
            return BallGeometry("lp", p=p, radius=r)
        if self.kind == "polygon":
            return BallGeometry("polygon", vertices=_half_to_full(self.vertices))
        if self.kind == "support_samples":
            return BallGeometry("polygon", vertices=support_samples_polygon(self.angles, self.values), exact=False)
        if self.kind == "radon_glue":
            return BallGeometry("polygon", vertices=glue_radon_arc(self.arc), exact=False)
        raise GeometryError(f"unknown unit ball kind {self.kind!r}")

    def to_dict(self) -> dict:
        if self.kind == "lp":
            d = {"type": "lp", "p": "inf" if math.isinf(self.p) else self.p}
            if self.radius != 1.0:
                d["radius"] = self.radius
            return d
        if self.kind == "polygon":
            return {"type": "polygon", "vertices": [list(v) for v in self.vertices]}
        if self.kind == "support_samples":
            return {"type": "support_samples", "angles": list(self.angles), "values": list(self.values)}
        return {"type": "radon_glue", "arc": [list(v) for v in self.arc]}

    @classmethod
    def from_dict(cls, d: dict) -> "UnitBallSpec":
        kind = d.get("type")
        if kind == "lp":
            p = d["p"]
            p = math.inf if p in ("inf", "infinity", "Infinity") else float(p)
            return cls.lp(p, d.get("radius", 1.0))
        if kind == "polygon":
            return cls.polygon(d["vertices"])
        if kind == "support_samples":
            return cls.support_samples(d["angles"], d["values"])
        if kind == "radon_glue":
            return cls.radon_glue(d["arc"])
        raise GeometryError(f"unknown unit ball type {kind!r}")


def _freeze(vs) -> tuple:
    return tuple((float(x), float(y)) for x, y in _as_points(vs))


@dataclass(frozen=True)
class NormedPlane:
    """A unit ball plus the scale ``c`` of the area form ``omega = c * det``."""

    ball: UnitBallSpec
    omega_scale: float = 1.0
    _geom: BallGeometry = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        c = self.omega_scale
        if not (math.isfinite(c) and c > 0):
            raise GeometryError(f"omega_scale must be a positive finite number, got {c}")
        object.__setattr__(self, "_geom", self.ball.geometry)

    @property
    def geometry(self) -> BallGeometry:
        return self._geom

    def to_dict(self) -> dict:
        return {"ball": self.ball.to_dict(), "omega_scale": self.omega_scale}

    @classmethod
    def from_dict(cls, d: dict) -> "NormedPlane":
        return cls(UnitBallSpec.from_dict(d["ball"]), float(d.get("omega_scale", 1.0)))

    def fingerprint(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:12]

    def with_scale(self, c: float) -> "NormedPlane":
        return NormedPlane(self.ball, c)

    @property
    def default_tol(self) -> float:
        return EXACT_TOL if self._geom.exact else SAMPLED_TOL


def euclidean_plane(c: float = 1.0) -> NormedPlane:
    return NormedPlane(UnitBallSpec.lp(2.0), c)


def lp_plane(p: float, c: float = 1.0) -> NormedPlane:
    return NormedPlane(UnitBallSpec.lp(p), c)


def polygon_plane(vertices, c: float = 1.0) -> NormedPlane:
    return NormedPlane(UnitBallSpec.polygon(vertices), c)


def regular_polygon(k: int, circumradius: float = 1.0, phase: float = 0.0) -> np.ndarray:
    t = phase + TWO_PI * np.arange(k) / k
    return circumradius * np.column_stack([np.cos(t), np.sin(t)])


# -- operations ------------------------------------------------------------------


def _vec_or_batch(v):
    arr = np.asarray(v, dtype=float)
    return arr.reshape(-1, 2), arr.ndim == 1


def norm_eval(plane: NormedPlane, v):
    """Minkowski functional of the unit ball; accepts one vector or an (N, 2) array."""
    pts, single = _vec_or_batch(v)
    out = plane.geometry.gauge(pts)
    return float(out[0]) if single else out


def symplectic(plane: NormedPlane, x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = plane.omega_scale * cross(x, y)
    return float(out) if np.ndim(out) == 0 else out


def antinorm_eval(plane: NormedPlane, v):
    """``sup{omega(x, v) : x in B}`` = ``c * h_B(J v)`` with ``J`` the clockwise quarter turn."""
    pts, single = _vec_or_batch(v)
    out = plane.omega_scale * plane.geometry.support(rot_minus90(pts))
    return float(out[0]) if single else out


def antinorm_plane(plane: NormedPlane) -> NormedPlane:
    """Plane whose norm is the anti-norm of ``plane`` (same ``omega``)."""
    g = plane.geometry
    c = plane.omega_scale
    if plane.ball.kind == "lp":
        p = plane.ball.p
        q = math.inf if p == 1 else (1.0 if math.isinf(p) else p / (p - 1.0))
        return NormedPlane(UnitBallSpec.lp(q, 1.0 / (c * plane.ball.radius)), c)
    return NormedPlane(UnitBallSpec.polygon(rot90(g.polar) / c), c)


def _min_along(plane: NormedPlane, v, w, lam_tol: float = 1e-12):
    """Batch golden-section minimum of ``lambda -> ||v + lambda w||``."""
    v = np.asarray(v, dtype=float).reshape(-1, 2)
    w = np.asarray(w, dtype=float).reshape(-1, 2)
    g = plane.geometry
    R = 4.0 * g.gauge(v) / g.gauge(w)
    a = -R
    b = R.copy()

    def f(lam):
        return g.gauge(v + lam[:, None] * w)

    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    iters = int(math.ceil(math.log(max(2 * R.max(), lam_tol) / lam_tol) / -math.log(GOLDEN))) + 1
    for _ in range(iters):
        left = fc < fd
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        nd = np.where(left, c, a + GOLDEN * (b - a))
        nc = np.where(left, b - GOLDEN * (b - a), d)
        fnd = np.where(left, fc, f(nd))
        fnc = np.where(left, f(nc), fd)
        c, d, fc, fd = nc, nd, fnc, fnd
    # lambda = 0 is always a candidate
    return np.minimum(np.minimum(fc, fd), g.gauge(v))


def birkhoff_orthogonal(plane: NormedPlane, v, w, tol: float | None = None) -> bool:
    """``v`` is left Birkhoff orthogonal to ``w``: ``||v|| <= ||v + t w||`` for all t."""
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    if not np.any(v) or not np.any(w):
        raise GeometryError("Birkhoff orthogonality needs non-zero vectors")
    tol = plane.default_tol if tol is None else tol
    nv = norm_eval(plane, v)
    return bool(_min_along(plane, v, w)[0] >= nv - tol * nv)


def boundary_tangents(plane: NormedPlane, pts) -> np.ndarray:
    """Forward support-line directions at boundary points (unit norm, ccw)."""
    g = plane.geometry
    pts = np.asarray(pts, dtype=float).reshape(-1, 2)
    if g.kind == "lp":
        return g.tangent(pts)
    ang = np.arctan2(pts[:, 1], pts[:, 0])
    t0 = g.vertex_angles[0]
    rel = t0 + np.mod(ang - t0, TWO_PI)
    k = np.searchsorted(g.vertex_angles, rel, side="right") - 1
    k = np.clip(k, 0, len(g.vertices) - 1)
    V = g.vertices
    E = np.roll(V, -1, axis=0) - V
    t = E[k]
    return t / g.gauge(t)[:, None]


class RadonCheck(NamedTuple):
    radon: bool
    witness: tuple | None
    ratio_spread: float


def antinorm_ratio_spread(plane: NormedPlane, n_dirs: int = 360) -> tuple[float, np.ndarray]:
    theta = np.arange(n_dirs) * (TWO_PI / n_dirs)
    e = np.column_stack([np.cos(theta), np.sin(theta)])
    r = antinorm_eval(plane, e) / norm_eval(plane, e)
    return float((r.max() - r.min()) / r.mean()), r


def is_radon(plane: NormedPlane, n_dirs: int = 64, tol: float = SAMPLED_TOL) -> RadonCheck:
    """Test symmetry of Birkhoff orthogonality on ``n_dirs`` boundary samples.

    The anti-norm/norm ratio test is computed alongside; ``ratio_spread`` is
    its relative spread (a Radon plane has spread 0).
    """
    if n_dirs < 8:
        raise GeometryError("is_radon needs n_dirs >= 8")
    g = plane.geometry
    theta = np.arange(n_dirs) * (TWO_PI / n_dirs)
    v = g.radial(theta)
    w = boundary_tangents(plane, v)
    nv = g.gauge(v)
    nw = g.gauge(w)
    fwd = _min_along(plane, v, w) >= nv * (1 - tol)
    back = _min_along(plane, w, v) >= nw * (1 - tol)
    spread, _ = antinorm_ratio_spread(plane, max(n_dirs, 8))
    bad = np.flatnonzero(fwd & ~back)
    if len(bad):
        i = int(bad[0])
        return RadonCheck(False, (tuple(v[i]), tuple(w[i])), spread)
    return RadonCheck(True, None, spread)


def radon_normalize(plane: NormedPlane, tol: float = SAMPLED_TOL, n_dirs: int = 64) -> NormedPlane:
    """Rescale ``omega`` so that the anti-norm equals the norm."""
    spread, _ = antinorm_ratio_spread(plane, n_dirs)
    if spread > tol:
        raise GeometryError(f"plane is not Radon: anti-norm/norm ratio spread {spread:.3e} > {tol:.1e}")
    e = np.array([1.0, 0.0])
    r = antinorm_eval(plane, e) / norm_eval(plane, e)
    out = plane.with_scale(plane.omega_scale / r)
    spread2, ratios = antinorm_ratio_spread(out, n_dirs)
    if np.max(np.abs(ratios - 1.0)) > max(tol, 1e-9) * 10:
        raise GeometryError("radon normalization failed its post-check")
    return out


def ball_area(plane: NormedPlane) -> float:
    """Area of the unit ball measured with the area form ``omega``."""
    return plane.omega_scale * plane.geometry.euclidean_area()
