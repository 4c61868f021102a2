"""Loading planes and curves from JSON files or short names."""

from __future__ import annotations

import json
import math
import os

from .curves import ConvexCurve, curve_from_dict
from .norm_core import GeometryError, NormedPlane, euclidean_plane, lp_plane, polygon_plane, regular_polygon
from .unit_circle import DEFAULT_N

SQUARE = [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)]


def named_plane(name: str) -> NormedPlane:
    """Planes by name: ``euclidean``, ``square``, ``hexagon``, ``lp:P``, ``poly:K``, ``glue:P``.

    ``glue:P`` is the Radon plane glued from the first-quadrant ``l_P`` arc.
    """
    key, _, arg = name.partition(":")
    key = key.strip().lower()
    if key in ("euclidean", "l2"):
        return euclidean_plane()
    if key == "square":
        return polygon_plane(SQUARE)
    if key == "hexagon":
        return polygon_plane(regular_polygon(6))
    if key == "lp":
        p = math.inf if arg in ("inf", "infinity") else float(arg)
        return lp_plane(p)
    if key == "poly":
        k = int(arg)
        if k % 2:
            raise GeometryError("poly:K needs an even vertex count for a symmetric ball")
        return polygon_plane(regular_polygon(k))
    if key == "glue":
        from .constructors import build_radon_plane, lp_quarter_arc

        return build_radon_plane(lp_quarter_arc(float(arg)))
    raise GeometryError(f"unknown plane name {name!r}")


def _floats(arg: str):
    return [float(x) for x in arg.split(",") if x.strip()] if arg else []


def named_curve(name: str, plane: NormedPlane | None = None, n: int = DEFAULT_N) -> ConvexCurve:
    """Curves by name: ``ellipse[:a,b]``, ``circle[:r]``, ``reuleaux[:w]``, ``polygon:K``, ``unit_circle[:r]``."""
    key, _, arg = name.partition(":")
    key = key.strip().lower()
    vals = _floats(arg)
    if key == "ellipse":
        a, b = (vals + [1.0, 0.5][len(vals):])[:2]
        d = {"type": "builtin", "name": "ellipse", "params": {"a": a, "b": b, "n": n}}
    elif key == "circle":
        d = {"type": "builtin", "name": "circle", "params": {"r": vals[0] if vals else 1.0, "n": n}}
    elif key == "reuleaux":
        d = {"type": "builtin", "name": "reuleaux_triangle", "params": {"width": vals[0] if vals else 1.0, "n": n}}
    elif key == "polygon":
        d = {"type": "builtin", "name": "regular_polygon", "params": {"k": int(vals[0])}}
    elif key == "unit_circle":
        d = {"type": "builtin", "name": "unit_circle", "params": {"n": n, "radius": vals[0] if vals else 1.0}}
    else:
        raise GeometryError(f"unknown curve name {name!r}")
    return curve_from_dict(d, plane, n)


def _read_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def load_plane(arg: str) -> NormedPlane:
    """A plane from a JSON file (``{"ball": ..., "omega_scale": c}``) or a name."""
    if os.path.exists(arg):
        d = _read_json(arg)
        if "ball" not in d:
            d = {"ball": d}
        return NormedPlane.from_dict(d)
    return named_plane(arg)


def load_curve(arg: str, plane: NormedPlane | None = None, n: int = DEFAULT_N) -> ConvexCurve:
    """A curve from a JSON file or a name."""
    if os.path.exists(arg):
        return curve_from_dict(_read_json(arg), plane, n)
    return named_curve(arg, plane, n)


def load_json_arg(arg: str) -> dict:
    """Inline JSON or a path to a JSON file."""
    if os.path.exists(arg):
        return _read_json(arg)
    return json.loads(arg)
