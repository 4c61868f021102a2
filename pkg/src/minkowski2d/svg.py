"""Static SVG figure: unit circle, anti-norm circle, a curve and four support lines."""

from __future__ import annotations

import numpy as np

from .curves import ConvexCurve, support_points
from .norm_core import NormedPlane, antinorm_plane
from .unit_circle import parametrize_unit_circle

SIZE = 480


def _path_d(P, tf) -> str:
    Q = tf(P)
    head = f"M{Q[0, 0]:.3f},{Q[0, 1]:.3f}"
    return head + "".join(f" L{x:.3f},{y:.3f}" for x, y in Q[1:]) + " Z"


def render_svg(plane: NormedPlane, curve: ConvexCurve | None = None, n: int = 512, n_lines: int = 4) -> str:
    path = parametrize_unit_circle(plane, max(n, 64))
    S = path.dense if path.polygonal else path.points
    ap = parametrize_unit_circle(antinorm_plane(plane), max(n, 64))
    Sa = ap.dense if ap.polygonal else ap.points
    shapes = [S, Sa]
    C = None
    if curve is not None:
        C = curve.points + curve.offset
        shapes.append(C)
    R = 1.15 * max(float(np.max(np.abs(P))) for P in shapes)
    scale = SIZE / (2 * R)

    def tf(P):
        P = np.atleast_2d(P)
        return np.column_stack([SIZE / 2 + scale * P[:, 0], SIZE / 2 - scale * P[:, 1]])

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
        f'<path d="{_path_d(S, tf)}" fill="none" stroke="#1f77b4" stroke-width="1.5" class="unit-circle"/>',
        f'<path d="{_path_d(Sa, tf)}" fill="none" stroke="#ff7f0e" stroke-width="1" stroke-dasharray="4 3" class="antinorm-circle"/>',
    ]
    if C is not None:
        out.append(f'<path d="{_path_d(C, tf)}" fill="none" stroke="black" stroke-width="1.5" class="curve"/>')
        u = path.total_length * np.arange(n_lines) / n_lines
        _, tans = path.evaluate(u)
        pts = np.atleast_2d(support_points(plane, curve, path, u)) + curve.offset
        for p, t in zip(pts, tans):
            t = t / np.hypot(*t)
            a, b = tf(p - 2 * R * t)[0], tf(p + 2 * R * t)[0]
            out.append(
                f'<line x1="{a[0]:.3f}" y1="{a[1]:.3f}" x2="{b[0]:.3f}" y2="{b[1]:.3f}" '
                'stroke="#2ca02c" stroke-width="0.8" class="support-line"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(fname: str, plane: NormedPlane, curve: ConvexCurve | None = None, n: int = 512) -> None:
    with open(fname, "w") as fh:
        fh.write(render_svg(plane, curve, n))
