"""Constant-width synthesis, Radon plane gluing and smoothing by support mollification."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import ConvexCurve, is_constant_width
from .norm_core import (
    TWO_PI,
    GeometryError,
    NormedPlane,
    UnitBallSpec,
    cross,
    glue_radon_arc,
    is_radon,
    radon_normalize,
    rot90,
    rot_minus90,
)
from .unit_circle import DEFAULT_N, ArcLengthPath, parametrize_unit_circle

RHO_MARGIN = 1e-6


class ConvexityError(GeometryError):
    """A synthesized support function does not describe a convex curve."""

    def __init__(self, msg, interval=None):
        super().__init__(msg)
        self.interval = interval


@dataclass(frozen=True)
class WidthSynthesisSpec:
    """Constant width ``width`` plus odd harmonics ``(k, a_k[, b_k])`` on ``d/2``."""

    width: float
    harmonics: tuple = ()
    n: int = DEFAULT_N

    def __post_init__(self):
        if not self.width > 0:
            raise GeometryError("width must be positive")
        hs = []
        for h in self.harmonics:
            k = int(h[0])
            if k <= 0 or k % 2 == 0 or k != h[0]:
                raise GeometryError(f"harmonic index must be a positive odd integer, got {h[0]}")
            a = float(h[1])
            b = float(h[2]) if len(h) > 2 else 0.0
            hs.append((k, a, b))
        object.__setattr__(self, "harmonics", tuple(hs))

    @classmethod
    def from_dict(cls, d: dict) -> "WidthSynthesisSpec":
        return cls(float(d["width"]), tuple(tuple(h) for h in d.get("harmonics", ())), int(d.get("n", DEFAULT_N)))

    def to_dict(self) -> dict:
        return {"width": self.width, "harmonics": [list(h) for h in self.harmonics], "n": self.n}

    def support(self, u, L: float) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        h = np.full(u.shape, 0.5 * self.width)
        for k, a, b in self.harmonics:
            x = TWO_PI * k * u / L
            h = h + a * np.cos(x) + b * np.sin(x)
        return h


def support_lines(path: ArcLengthPath):
    """Parameters, anchor points and unit tangents of the support-line family.

    Polygonal unit circles contribute one line per edge (parameter at the
    edge midpoint); smooth ones one line per grid point.
    """
    if path.polygonal:
        P = path.dense
        seg = np.roll(P, -1, axis=0) - P
        ell = np.diff(path.dense_cum)
        u = path.dense_cum[:-1] + 0.5 * ell
        keep = ell > 1e-12 * path.total_length
        return u[keep], (P + 0.5 * seg)[keep], seg[keep] / ell[keep, None]
    return path.params, path.points, path.tangents


def curve_from_minkowski_support(plane: NormedPlane, path: ArcLengthPath, h, source=None) -> ConvexCurve:
    """Envelope of the support lines ``omega(x, phi'(u)) = h(u) omega(phi(u), phi'(u))``.

    ``h`` is a callable of the parameter ``u``. Convexity is certified by the
    discrete radii of curvature (norm edge length per unit parameter), which
    must exceed ``RHO_MARGIN``; otherwise :class:`ConvexityError` carries the
    offending parameter interval.
    """
    u, phi, T = support_lines(path)
    hv = np.asarray(h(u), dtype=float)
    N = rot_minus90(T)
    H = hv * np.sum(phi * N, axis=1)
    N1 = np.roll(N, -1, axis=0)
    H1 = np.roll(H, -1)
    det = cross(N, N1)
    X = np.column_stack([H * N1[:, 1] - H1 * N[:, 1], N[:, 0] * H1 - N1[:, 0] * H]) / det[:, None]
    edge = X - np.roll(X, 1, axis=0)  # edge on line j runs from X[j-1] to X[j]
    lam = np.sum(edge * T, axis=1) / np.sum(T * T, axis=1)
    L = path.total_length
    du = 0.5 * np.mod(np.roll(u, -1) - np.roll(u, 1), L)
    rho = lam / du
    bad = rho <= RHO_MARGIN
    if bad.any():
        interval = _bad_interval(u, bad, int(np.argmin(rho)))
        raise ConvexityError(
            f"support function is not convex: radius of curvature {rho.min():.3e} <= {RHO_MARGIN} "
            f"on u in [{interval[0]:.6g}, {interval[1]:.6g}]",
            interval,
        )
    return ConvexCurve.from_points(X, source)


def _bad_interval(u, bad, i0):
    """Circular run of ``bad`` lines containing index ``i0``, as a parameter interval."""
    m = len(bad)
    lo = hi = i0
    while bad[(lo - 1) % m] and (i0 - lo) < m - 1:
        lo -= 1
    while bad[(hi + 1) % m] and (hi - lo) < m - 1:
        hi += 1
    return float(u[lo % m]), float(u[hi % m])


def build_constant_width_curve(plane: NormedPlane, spec: WidthSynthesisSpec, tol: float = 1e-3) -> ConvexCurve:
    """Curve of constant width ``spec.width`` from an odd-harmonic Minkowski support function.

    Only harmonics odd under the half-period shift are used, so
    ``h(u) + h(u + L/2) = d`` holds identically.
    """
    path = parametrize_unit_circle(plane, spec.n)
    L = path.total_length
    src = {"type": "constant_width", **spec.to_dict(), "plane": plane.fingerprint()}
    curve = curve_from_minkowski_support(plane, path, lambda u: spec.support(u, L), src)
    ok, _ = is_constant_width(plane, curve, tol)
    if not ok:
        raise GeometryError("synthesized curve failed the constant-width check")
    return curve


def flat_harmonics(path: ArcLengthPath, anchors, amplitude: float, ks=(1, 3, 5, 7, 9)) -> tuple:
    """Cosine harmonics whose sum is flat to third order at ``u = 0`` and at given points of ``S``.

    Glued unit circles have zero curvature on one side of each glue point,
    and a perturbation of ``h`` with nonzero low derivatives there folds the
    envelope. Cosines give odd derivatives zero at ``u = 0``; one equation
    kills ``h''(0)`` and three more per anchor kill ``h', h'', h'''``. The
    remaining null direction is scaled so its largest coefficient is
    ``amplitude``.
    """
    L = path.total_length
    P = path.dense
    ks = np.asarray(ks, dtype=float)
    rows = [ks**2]
    for a in np.atleast_2d(np.asarray(anchors, dtype=float)):
        j = int(np.argmin(np.hypot(*(P - a).T)))
        x = TWO_PI * path.dense_cum[j] / L
        rows += [ks * np.sin(ks * x), ks**2 * np.cos(ks * x), ks**3 * np.sin(ks * x)]
    A = np.array(rows)
    if A.shape[0] >= len(ks):
        raise GeometryError("too many flatness conditions for the harmonic set")
    v = np.linalg.svd(A)[2][-1]
    v = v / np.abs(v).max()
    return tuple((int(k), float(amplitude * c)) for k, c in zip(ks, v))


def build_radon_plane(arc, tol: float = 1e-6) -> NormedPlane:
    """Radon plane from a convex arc in the first quadrant from (1,0) to (0,1)."""
    plane = NormedPlane(UnitBallSpec.radon_glue(arc), 1.0)
    check = is_radon(plane, 64, tol)
    if not check.radon:
        raise GeometryError(f"glued curve failed the Radon test (witness {check.witness})")
    return radon_normalize(plane, tol)


def lp_quarter_arc(p: float, m: int = 512) -> np.ndarray:
    """``m + 1`` points of the first-quadrant ``l_p`` arc from (1,0) to (0,1)."""
    t = 0.5 * math.pi * np.arange(m + 1) / m
    e = np.column_stack([np.cos(t), np.sin(t)])
    nrm = (np.abs(e[:, 0]) ** p + np.abs(e[:, 1]) ** p) ** (1.0 / p)
    arc = e / nrm[:, None]
    arc[0] = (1.0, 0.0)
    arc[-1] = (0.0, 1.0)
    return arc


# -- smoothing ------------------------------------------------------------------------


def _support_on_grid(obj, theta) -> np.ndarray:
    dirs = np.column_stack([np.cos(theta), np.sin(theta)])
    if isinstance(obj, ConvexCurve):
        return obj.support(dirs)[0]
    return obj.geometry.support(dirs)


def _mollify(p, sigma: float) -> np.ndarray:
    m = len(p)
    dtheta = TWO_PI / m
    j = np.arange(m)
    j = np.minimum(j, m - j) * dtheta
    kern = np.exp(-0.5 * (j / sigma) ** 2)
    kern /= kern.sum()
    return np.real(np.fft.ifft(np.fft.fft(p) * np.fft.fft(kern)))


def _polygon_from_grid_support(theta, p) -> np.ndarray:
    N = np.column_stack([np.cos(theta), np.sin(theta)])
    N1 = np.roll(N, -1, axis=0)
    p1 = np.roll(p, -1)
    det = cross(N, N1)
    return np.column_stack([p * N1[:, 1] - p1 * N[:, 1], N[:, 0] * p1 - N1[:, 0] * p]) / det[:, None]


def _thin_support_lines(theta, p, epsilon: float) -> np.ndarray:
    """Indices of support lines to keep from a fine uniform grid.

    Near rounded corners the fine polygon has edges so short that their
    turning is below the roundoff of the line intersections. A line is kept
    once the edge length accumulated since the last kept line reaches a small
    floor, or once the angular gap would exceed a cap that keeps the extra
    support of the coarser circumscribed polygon far below ``epsilon``.
    """
    m = len(theta)
    dt = TWO_PI / m
    lam = (np.roll(p, 1) + np.roll(p, -1) - 2.0 * math.cos(dt) * p) / math.sin(dt)
    R = float(np.max(p))
    floor = TWO_PI * R / 4096
    gap_max = max(1, int(math.sqrt(2e-3 * epsilon / R) / dt))
    cum = np.cumsum(lam)
    keep = [0]
    i = 0
    while True:
        j = min(int(np.searchsorted(cum, cum[i] + floor)), i + gap_max)
        if j >= m:
            break
        keep.append(j)
        i = j
    return np.asarray(keep)


def smoothed_support(obj, epsilon: float):
    """Mollified Euclidean support function plus ``epsilon/2``, with the grid used.

    The Gaussian width starts at ``epsilon / R`` and is halved until the
    mollification moves the support function by at most ``epsilon/2``.
    """
    if not epsilon > 0:
        raise GeometryError("epsilon must be positive")
    if isinstance(obj, ConvexCurve):
        R = float(np.max(np.hypot(*obj.points.T)))
    else:
        R = obj.geometry.radius_scale
    sigma = epsilon / R
    for _ in range(40):
        m = int(min(max(4096, 2 ** math.ceil(math.log2(64 * math.pi / sigma))), 2 ** 20))
        theta = TWO_PI * np.arange(m) / m
        p = _support_on_grid(obj, theta)
        ps = _mollify(p, sigma)
        hd = float(np.max(np.abs(ps - p)))
        if hd <= 0.5 * epsilon:
            return theta, ps + 0.5 * epsilon, p
        sigma *= 0.5
    raise GeometryError("could not mollify within the Hausdorff budget")


def hausdorff_distance(a, b, m: int = 8192) -> float:
    """Sup-difference of Euclidean support functions (curves or unit balls)."""
    theta = TWO_PI * np.arange(m) / m
    pa = _support_on_grid(a, theta)
    pb = _support_on_grid(b, theta)
    if isinstance(a, ConvexCurve):
        pa = pa + np.cos(theta) * a.offset[0] + np.sin(theta) * a.offset[1]
    if isinstance(b, ConvexCurve):
        pb = pb + np.cos(theta) * b.offset[0] + np.sin(theta) * b.offset[1]
    return float(np.max(np.abs(pa - pb)))


def _auerbach_radon(vertices) -> np.ndarray:
    """Re-glue a symmetric polygon into a Radon polygon through a maximal-area conjugate pair."""
    from .norm_core import BallGeometry

    g = BallGeometry("polygon", vertices=vertices)
    V = g.vertices
    F, idx = _polygon_support_with_index(g, rot90(V))
    best = F.max()
    near = np.flatnonzero(F >= best * (1 - 1e-9))
    ang = np.abs(np.arctan2(V[near, 1], V[near, 0]))
    i = int(near[np.argmin(ang)])
    j = int(idx[i])
    x0, y0 = V[i], V[j]
    M = np.column_stack([x0, y0])
    Minv = np.linalg.inv(M)
    m = len(V)
    order = [(i + k) % m for k in range((j - i) % m + 1)]
    arc = V[order] @ Minv.T
    arc[0] = (1.0, 0.0)
    arc[-1] = (0.0, 1.0)
    arc = np.clip(arc, 0.0, 1.0)
    glued = glue_radon_arc(arc)
    return glued @ M.T


def _polygon_support_with_index(g, dirs):
    from . import kernels

    return kernels.polygon_support(g.normal_angles, g.vertices, np.ascontiguousarray(dirs))


def smooth_approximate(obj, epsilon: float, radon: bool | None = None):
    """Smooth, strictly convex approximation within Hausdorff distance ``epsilon``.

    Accepts a :class:`UnitBallSpec` (returns a ``UnitBallSpec``) or a
    :class:`ConvexCurve` (returns a ``ConvexCurve``). Radon unit balls are
    re-glued so the result is again Radon; ``radon`` overrides detection.
    """
    theta, ps, _ = smoothed_support(obj, epsilon)
    keep = _thin_support_lines(theta, ps, epsilon)
    theta, ps = theta[keep], ps[keep]
    P = _polygon_from_grid_support(theta, ps)
    if isinstance(obj, ConvexCurve):
        return ConvexCurve.from_points(P + obj.offset)
    if radon is None:
        radon = obj.kind == "radon_glue" or is_radon(NormedPlane(obj, 1.0)).radon
    if radon:
        return UnitBallSpec.polygon(_auerbach_radon(P))
    return UnitBallSpec.support_samples(theta, ps)


# -- perturbed unit circles ------------------------------------------------------


def curve_from_euclidean_support(theta, p, source=None) -> ConvexCurve:
    """Polygon cut out by the lines ``<x, e(theta_i)> = p_i``, certified convex.

    Every line must contribute an edge of positive length; otherwise
    :class:`ConvexityError` reports the offending angle interval.
    """
    theta = np.asarray(theta, dtype=float)
    X = _polygon_from_grid_support(theta, np.asarray(p, dtype=float))
    T = rot90(np.column_stack([np.cos(theta), np.sin(theta)]))
    lam = np.sum((X - np.roll(X, 1, axis=0)) * T, axis=1)
    bad = lam <= RHO_MARGIN * (TWO_PI / len(theta))
    if bad.any():
        interval = _bad_interval(theta, bad, int(np.argmin(lam)))
        raise ConvexityError(f"support values are not convex on theta in [{interval[0]:.6g}, {interval[1]:.6g}]", interval)
    return ConvexCurve.from_points(X, source)


def perturbed_unit_circle(plane: NormedPlane, harmonics, r0: float, n: int = DEFAULT_N) -> ConvexCurve:
    """Unit circle plus a Euclidean disc of radius ``r0`` plus support harmonics.

    The Euclidean support function is ``h_B + r0 + sum a_k cos k t + b_k sin k t``;
    the disc keeps the radius of curvature away from zero so small
    perturbations of polygonal or flat unit circles stay convex.
    """
    theta = TWO_PI * np.arange(n) / n
    dirs = np.column_stack([np.cos(theta), np.sin(theta)])
    p = plane.geometry.support(dirs) + r0
    for k, a, *b in harmonics:
        p = p + a * np.cos(k * theta) + (b[0] if b else 0.0) * np.sin(k * theta)
    src = {
        "type": "perturbed_circle",
        "plane": plane.fingerprint(),
        "r0": float(r0),
        "harmonics": [list(h) for h in harmonics],
        "n": int(n),
    }
    return curve_from_euclidean_support(theta, p, src)
