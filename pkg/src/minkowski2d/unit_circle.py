"""Arc-length parametrization of the unit circle of a normed plane."""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .norm_core import GeometryError, NormedPlane, TWO_PI, antinorm_eval, cross, shoelace

DEFAULT_N = 4096
DENSE_FACTOR = 8


@dataclass(frozen=True, eq=False)
class ArcLengthPath:
    """Positively oriented arc-length parametrization ``phi`` of the unit circle.

    ``params`` holds ``n`` equally spaced parameters ``u_i = i L / n``; the
    closing parameter ``u_n = L`` wraps to ``u_0``. ``points`` and
    ``tangents`` are ``phi(u_i)`` and ``phi'(u_i)``. The dense boundary
    polyline the grid was interpolated from is kept so the path can be
    evaluated at any parameter.
    """

    plane: NormedPlane
    params: np.ndarray
    points: np.ndarray
    tangents: np.ndarray
    total_length: float
    dense: np.ndarray
    dense_cum: np.ndarray

    @property
    def n(self) -> int:
        return len(self.params)

    @property
    def polygonal(self) -> bool:
        return self.plane.geometry.kind == "polygon"

    def evaluate(self, u):
        """Points and forward tangents at arbitrary parameters (taken mod ``L``)."""
        u = np.mod(np.asarray(u, dtype=float).reshape(-1), self.total_length)
        P = self.dense
        seg = np.roll(P, -1, axis=0) - P
        seglen = np.diff(self.dense_cum)
        j = np.clip(np.searchsorted(self.dense_cum, u, side="right") - 1, 0, len(P) - 1)
        f = (u - self.dense_cum[j]) / seglen[j]
        q = P[j] + f[:, None] * seg[j]
        g = self.plane.geometry
        if g.kind == "lp":
            q = q / g.gauge(q)[:, None]
            t = g.tangent(q)
        else:
            t = seg[j] / seglen[j][:, None]
        return q, t

    def omega_phi_dphi(self) -> np.ndarray:
        return self.plane.omega_scale * cross(self.points, self.tangents)

    def tangent_angle_table(self):
        """Increasing (unwrapped tangent angle, parameter) pairs for direction matching."""
        g = self.plane.geometry
        P = self.dense
        if g.kind == "lp":
            t = g.tangent(P)
            u = self.dense_cum[:-1]
        else:
            seg = np.roll(P, -1, axis=0) - P
            t = seg
            u = self.dense_cum[:-1] + 0.5 * np.diff(self.dense_cum)
        a = np.unwrap(np.arctan2(t[:, 1], t[:, 0]))
        return a, u

    def parameter_for_direction(self, angles) -> np.ndarray:
        """Parameter ``u`` in ``[0, L)`` where ``phi'`` points along each Euclidean angle."""
        a, u = self.tangent_angle_table()
        L = self.total_length
        a_ext = np.concatenate([a - TWO_PI, a, a + TWO_PI])
        u_ext = np.concatenate([u - L, u, u + L])
        x = a[0] + np.mod(np.asarray(angles, dtype=float) - a[0], TWO_PI)
        return np.mod(np.interp(x, a_ext, u_ext), L)


def parametrize_unit_circle(plane: NormedPlane, n: int = DEFAULT_N, dense_factor: int = DENSE_FACTOR) -> ArcLengthPath:
    """Sample the unit circle by Euclidean angle, accumulate norm length and
    resample on an equal arc-length grid of ``n`` points.

    Polygonal balls use their exact vertices as the dense polyline and report
    forward one-sided tangents at corners. ``l_p`` balls are sampled at
    ``dense_factor * n`` angles; grid points are pulled back onto the circle
    and receive exact tangents.
    """
    if n < 64:
        raise GeometryError("parametrize_unit_circle needs n >= 64")
    g = plane.geometry
    P = g.boundary(dense_factor * n)
    if abs(shoelace(P)) <= 1e-14:
        raise GeometryError("degenerate unit ball (zero area)")
    seg = np.roll(P, -1, axis=0) - P
    cum = np.concatenate([[0.0], np.cumsum(g.gauge(seg))])
    L = float(cum[-1])
    params = np.arange(n) * (L / n)
    path = ArcLengthPath(plane, params, None, None, L, P, cum)
    if n % 2:
        pts, tans = path.evaluate(params)
    else:
        # B = -B, so the second half is the reflected first half; this keeps
        # phi(u + L/2) = -phi(u) exact where the tangent map is steep
        pts, tans = path.evaluate(params[: n // 2])
        pts, tans = np.vstack([pts, -pts]), np.vstack([tans, -tans])
    object.__setattr__(path, "points", pts)
    object.__setattr__(path, "tangents", tans)
    return path


def circle_perimeter(plane: NormedPlane, n: int = DEFAULT_N) -> float:
    """``l(S)``, the norm length of the unit circle."""
    return parametrize_unit_circle(plane, n).total_length


def circle_perimeter_antinorm(plane: NormedPlane, n: int = DEFAULT_N, path: ArcLengthPath | None = None) -> float:
    """``l_a(S)``, the anti-norm length of the unit circle."""
    path = path or parametrize_unit_circle(plane, n)
    P = path.dense
    seg = np.roll(P, -1, axis=0) - P
    return float(np.sum(antinorm_eval(plane, seg)))


def kepler_deviation(plane: NormedPlane, path: ArcLengthPath) -> float:
    """``max |omega(phi, phi') - 1|`` over the grid; zero for Radon-normalized planes."""
    if path.plane.ball != plane.ball:
        raise GeometryError("path was built on a different unit ball")
    w = plane.omega_scale * cross(path.points, path.tangents)
    return float(np.max(np.abs(w - 1.0)))


def kepler_integral(plane: NormedPlane, path: ArcLengthPath) -> float:
    """``int_0^L omega(phi, phi') du`` by the periodic rectangle rule.

    Each sample is weighted by the parameter step that follows it, so exact
    polygon paths with unequal edges are integrated exactly.
    """
    w = plane.omega_scale * cross(path.points, path.tangents)
    du = np.diff(np.append(path.params, path.params[0] + path.total_length))
    return float(np.sum(w * du))


def export_path_csv(path: ArcLengthPath, fh) -> None:
    fh.write(f"# total_length={path.total_length!r},plane={path.plane.fingerprint()}\n")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["u", "x", "y", "dx", "dy"])
    for u, p, t in zip(path.params, path.points, path.tangents):
        w.writerow([repr(float(u)), repr(float(p[0])), repr(float(p[1])), repr(float(t[0])), repr(float(t[1]))])
