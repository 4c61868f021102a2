"""Command-line interface: ``minkowski2d <group> <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import constructors as cons
from . import curves as cv
from . import verify as vf
from .norm_core import (
    GeometryError,
    NormedPlane,
    UnitBallSpec,
    antinorm_eval,
    birkhoff_orthogonal,
    is_radon,
    norm_eval,
    radon_normalize,
)
from .specs import load_curve, load_json_arg, load_plane
from .svg import write_svg
from .unit_circle import DEFAULT_N, circle_perimeter_antinorm, export_path_csv, parametrize_unit_circle


def _vec(s: str):
    parts = [float(x) for x in s.replace(",", " ").split()]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two numbers, got {s!r}")
    return np.array(parts)


def _emit(args, payload, rows=None):
    """Print JSON to stdout; also write it (or CSV rows) to ``--out``."""
    text = json.dumps(payload, indent=2, default=float)
    print(text)
    out = getattr(args, "out", None)
    if not out:
        return
    if out.endswith(".csv"):
        rows = rows if rows is not None else [payload] if isinstance(payload, dict) else payload
        with open(out, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0].keys()), lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
    else:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def _plane(args) -> NormedPlane:
    return load_plane(args.plane)


def _curve(args, plane):
    return load_curve(args.curve, plane, args.n)


def _maybe_svg(args, plane, curve=None):
    if getattr(args, "svg", None):
        write_svg(args.svg, plane, curve)


# -- handlers -------------------------------------------------------------------


def cmd_norm_eval(args):
    plane = _plane(args)
    vals = [norm_eval(plane, v) for v in args.vec]
    _emit(args, {"plane": plane.fingerprint(), "vectors": [v.tolist() for v in args.vec], "norm": vals})


def cmd_antinorm_eval(args):
    plane = _plane(args)
    vals = [antinorm_eval(plane, v) for v in args.vec]
    _emit(args, {"plane": plane.fingerprint(), "vectors": [v.tolist() for v in args.vec], "antinorm": vals})


def cmd_birkhoff(args):
    plane = _plane(args)
    tol = args.tol
    fwd = birkhoff_orthogonal(plane, args.v, args.w, tol)
    back = birkhoff_orthogonal(plane, args.w, args.v, tol)
    _emit(args, {"plane": plane.fingerprint(), "v": args.v.tolist(), "w": args.w.tolist(), "v_perp_w": fwd, "w_perp_v": back})


def cmd_radon(args):
    plane = _plane(args)
    tol = args.tol if args.tol is not None else 1e-6
    if args.action == "check":
        chk = is_radon(plane, args.dirs, tol)
        _emit(args, {"plane": plane.fingerprint(), "radon": chk.radon, "witness": chk.witness, "ratio_spread": chk.ratio_spread})
    else:
        out = radon_normalize(plane, tol)
        payload = out.to_dict()
        _emit(args, payload)


def cmd_circle(args):
    plane = _plane(args)
    path = parametrize_unit_circle(plane, args.n)
    if args.action == "perimeter":
        payload = {"plane": plane.fingerprint(), "n": args.n, "length": path.total_length}
        if args.antinorm:
            payload["antinorm_length"] = circle_perimeter_antinorm(plane, args.n, path)
        _emit(args, payload)
        return
    if args.out and args.out.endswith(".csv"):
        with open(args.out, "w") as fh:
            export_path_csv(path, fh)
        print(json.dumps({"plane": plane.fingerprint(), "n": path.n, "total_length": path.total_length, "csv": args.out}))
    else:
        _emit(args, {
            "plane": plane.fingerprint(),
            "n": path.n,
            "total_length": path.total_length,
            "u": path.params.tolist(),
            "points": path.points.tolist(),
            "tangents": path.tangents.tolist(),
        })
    _maybe_svg(args, plane)


def cmd_curve(args):
    plane = _plane(args)
    curve = _curve(args, plane)
    base = {"plane": plane.fingerprint(), "curve": curve.fingerprint()}
    a = args.action
    if a == "length":
        base.update(length=cv.curve_length(plane, curve), antinorm_length=cv.curve_length_antinorm(plane, curve))
    elif a == "diameter":
        d, (p, q) = cv.diameter(plane, curve)
        base.update(diameter=d, endpoints=[p.tolist(), q.tolist()])
    elif a == "width":
        if args.dir is not None:
            base.update(direction=args.dir.tolist(), width=cv.width_in_direction(plane, curve, args.dir))
        cw, mean = cv.is_constant_width(plane, curve, args.tol if args.tol is not None else cv.CW_TOL)
        w = cv.width_profile(plane, curve)
        base.update(constant_width=cw, mean_width=mean, min_width=float(w.min()), max_width=float(w.max()))
    elif a == "support":
        path = parametrize_unit_circle(plane, args.n)
        u = np.asarray(args.u if args.u else [0.0], dtype=float)
        base.update(u=u.tolist(), h=np.atleast_1d(cv.minkowski_support(plane, curve, path, u)).tolist())
    elif a == "curvature":
        path = parametrize_unit_circle(plane, args.n)
        s = np.asarray(args.s if args.s else [0.0], dtype=float)
        k, rho = cv.circular_curvature(plane, curve, path, s)
        base.update(s=s.tolist(), curvature=np.atleast_1d(k).tolist(), radius=np.atleast_1d(rho).tolist())
    _emit(args, base)
    _maybe_svg(args, plane, curve)


def cmd_build(args):
    a = args.action
    if a == "cw":
        plane = _plane(args)
        spec = cons.WidthSynthesisSpec.from_dict(load_json_arg(args.spec))
        curve = cons.build_constant_width_curve(plane, spec)
        payload = {"type": "polyline", "points": (curve.points + curve.offset).tolist(), "source": curve.source}
        _emit(args, payload if args.out else {"curve": curve.fingerprint(), "vertices": len(curve.points), "width": cv.is_constant_width(plane, curve)[1]})
        _maybe_svg(args, plane, curve)
    elif a == "radon":
        spec = load_json_arg(args.arc)
        arc = cons.lp_quarter_arc(float(spec["lp"]), int(spec.get("m", 512))) if isinstance(spec, dict) else spec
        plane = cons.build_radon_plane(arc)
        _emit(args, plane.to_dict() if args.out else {"plane": plane.fingerprint(), "omega_scale": plane.omega_scale})
        _maybe_svg(args, plane)
    else:
        if args.epsilon is None:
            raise GeometryError("build smooth needs --epsilon")
        if args.curve:
            plane = _plane(args) if args.plane else None
            curve = load_curve(args.curve, plane, args.n)
            sm = cons.smooth_approximate(curve, args.epsilon)
            payload = {"type": "polyline", "points": (sm.points + sm.offset).tolist()}
            summary = {"curve": curve.fingerprint(), "smoothed": cv.ConvexCurve.fingerprint(sm), "smooth": sm.smooth}
        else:
            plane = _plane(args)
            spec = cons.smooth_approximate(plane.ball, args.epsilon)
            payload = {"ball": spec.to_dict(), "omega_scale": 1.0}
            sp = NormedPlane(spec, 1.0)
            summary = {"plane": plane.fingerprint(), "smoothed": sp.fingerprint(), "smooth": sp.geometry.smooth}
        _emit(args, payload if args.out else summary)


def cmd_verify(args):
    plane = _plane(args)
    curve = _curve(args, plane)
    eq = args.tol if args.tol is not None else vf.EQ_TOL
    viol = args.violation_tol
    a = args.action
    if a == "rs":
        rep = vf.verify_rosenthal_szasz(plane, curve, args.n, eq, viol)
    elif a == "antinorm":
        rep = vf.verify_antinorm_bound(plane, curve, args.n, eq, viol)
    elif a == "dual":
        rep = vf.verify_dual_bound(plane, curve, args.n, eq, viol, circle=args.circle)
    elif a == "barbier":
        rep = vf.verify_barbier(plane, curve, args.n, eq)
    elif a == "curvsum":
        rep = vf.verify_curvature_sum(plane, curve, args.n, eq_tol=eq)
    else:
        rep = vf.verify_defect_integral(plane, curve, args.n, eq, viol)
    rep.seed = args.seed
    _emit(args, rep.to_dict())
    _maybe_svg(args, plane, curve)
    if not rep.passed:
        print(f"FAILURE: {rep.claim} violated (slack {rep.slack:.3e})", file=sys.stderr)
        return 1
    return 0


def cmd_sweep(args):
    plane = _plane(args)
    seed = args.seed if args.seed is not None else 0
    res = vf.explore_open_problem(plane, args.count, seed, args.n, amplitude=args.amplitude)
    rows = [{"index": i, "ratio": r} for i, r in enumerate(res["ratios"])]
    _emit(args, res, rows)


# -- parser ---------------------------------------------------------------------


def _common(p, curve=False, n_default=DEFAULT_N):
    p.add_argument("--plane", default="euclidean", help="plane JSON file or name (euclidean, square, hexagon, lp:P, poly:K, glue:P)")
    if curve:
        p.add_argument("--curve", default="ellipse", help="curve JSON file or name (ellipse:a,b, circle:r, reuleaux:w, polygon:K, unit_circle)")
    p.add_argument("--n", type=int, default=n_default)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="write JSON (or CSV for *.csv)")
    p.add_argument("--svg", default=None, help="write an SVG figure")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="minkowski2d", description="Geometry of convex curves in normed planes.")
    sub = ap.add_subparsers(dest="group", required=True)

    g = sub.add_parser("norm").add_subparsers(dest="action", required=True)
    p = g.add_parser("eval")
    _common(p)
    p.add_argument("--vec", type=_vec, action="append", required=True)
    p.set_defaults(func=cmd_norm_eval)

    g = sub.add_parser("antinorm").add_subparsers(dest="action", required=True)
    p = g.add_parser("eval")
    _common(p)
    p.add_argument("--vec", type=_vec, action="append", required=True)
    p.set_defaults(func=cmd_antinorm_eval)

    p = sub.add_parser("birkhoff")
    _common(p)
    p.add_argument("--v", type=_vec, required=True)
    p.add_argument("--w", type=_vec, required=True)
    p.set_defaults(func=cmd_birkhoff)

    p = sub.add_parser("radon")
    p.add_argument("action", choices=["check", "normalize"])
    _common(p)
    p.add_argument("--dirs", type=int, default=64)
    p.set_defaults(func=cmd_radon)

    p = sub.add_parser("circle")
    p.add_argument("action", choices=["param", "perimeter"])
    _common(p)
    p.add_argument("--antinorm", action="store_true", help="also report the anti-norm length")
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("curve")
    p.add_argument("action", choices=["length", "diameter", "width", "support", "curvature"])
    _common(p, curve=True)
    p.add_argument("--dir", type=_vec, default=None)
    p.add_argument("--u", type=float, action="append")
    p.add_argument("--s", type=float, action="append")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("build")
    p.add_argument("action", choices=["cw", "radon", "smooth"])
    _common(p)
    p.add_argument("--spec", default='{"width": 1.0, "harmonics": [], "n": 4096}', help="synthesis spec JSON or file")
    p.add_argument("--arc", default='{"lp": 3}', help='arc points JSON/file, or {"lp": P}')
    p.add_argument("--curve", default=None)
    p.add_argument("--epsilon", type=float, default=None)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify")
    p.add_argument("action", choices=["rs", "antinorm", "dual", "barbier", "curvsum", "defect"])
    _common(p, curve=True)
    p.add_argument("--violation-tol", type=float, default=vf.VIOLATION_TOL)
    p.add_argument("--circle", choices=["norm", "antinorm"], default="norm", help="circle length used by the dual bound")
    p.set_defaults(func=cmd_verify)

    g = sub.add_parser("sweep").add_subparsers(dest="action", required=True)
    p = g.add_parser("open-problem")
    _common(p, n_default=1024)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--amplitude", type=float, default=0.3)
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return int(rc or 0)


if __name__ == "__main__":
    sys.exit(main())
