"""Checks of the perimeter/diameter inequalities and their equality cases."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .constructors import ConvexityError, perturbed_unit_circle
from .curves import (
    ConvexCurve,
    curvature_radius_sums,
    curve_length,
    curve_length_antinorm,
    diameter,
    is_constant_width,
    minkowski_support,
    support_points,
    unit_circle_curve,
)
from .norm_core import (
    GeometryError,
    NormedPlane,
    antinorm_plane,
    cross,
    is_radon,
    radon_normalize,
)
from .unit_circle import DEFAULT_N, circle_perimeter_antinorm, parametrize_unit_circle

EQ_TOL = 1e-3
VIOLATION_TOL = 1e-4
CURVATURE_TOL = 1e-2

CLAIMS = ("RS_RADON", "RS_ANTINORM", "RS_DUAL", "BARBIER", "CURVATURE_SUM", "DEFECT_INTEGRAL")
REPORT_FIELDS = ("claim", "plane", "curve", "lhs", "bound", "slack", "equality", "n", "tol", "seed")


@dataclass
class VerificationReport:
    """One measured claim. ``to_dict`` gives the fixed JSON schema; ``passed``
    and ``details`` are extra diagnostics kept out of it."""

    claim: str
    plane: str
    curve: str
    lhs: float
    bound: float
    equality: bool
    n: int
    tol: dict
    seed: int | None = None
    passed: bool = True
    details: dict = field(default_factory=dict)

    @property
    def slack(self) -> float:
        return self.bound - self.lhs

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "plane": self.plane,
            "curve": self.curve,
            "lhs": float(self.lhs),
            "bound": float(self.bound),
            "slack": float(self.slack),
            "equality": bool(self.equality),
            "n": int(self.n),
            "tol": dict(self.tol),
            "seed": self.seed,
        }


def _report(claim, plane, curve, lhs, bound, n, eq_tol, viol_tol, seed=None, details=None, proved=True):
    slack = bound - lhs
    eq = abs(slack) < eq_tol * abs(bound)
    passed = (slack >= -viol_tol * abs(bound)) if proved else True
    return VerificationReport(
        claim,
        plane.fingerprint(),
        curve.fingerprint(),
        float(lhs),
        float(bound),
        bool(eq),
        int(n),
        {"equality": eq_tol, "violation": viol_tol},
        seed,
        bool(passed),
        details or {},
    )


def _require_radon(plane: NormedPlane, what: str) -> NormedPlane:
    check = is_radon(plane)
    if not check.radon:
        raise GeometryError(
            f"{what} needs a Radon plane (Birkhoff asymmetry at {check.witness}); "
            "use verify_antinorm_bound for general planes"
        )
    return radon_normalize(plane)


def verify_rosenthal_szasz(plane, curve, n=DEFAULT_N, eq_tol=EQ_TOL, viol_tol=VIOLATION_TOL) -> VerificationReport:
    """``l(gamma) <= diam * l(S)/2`` on a Radon plane (normalized first)."""
    plane = _require_radon(plane, "verify_rosenthal_szasz")
    L = parametrize_unit_circle(plane, n).total_length
    lhs = curve_length(plane, curve)
    d, _ = diameter(plane, curve)
    cw, width = is_constant_width(plane, curve, eq_tol)
    rep = _report("RS_RADON", plane, curve, lhs, d * L / 2, n, eq_tol, viol_tol)
    rep.details.update(diameter=d, circle_length=L, constant_width=cw, width=width, agrees=cw == rep.equality)
    return rep


def verify_antinorm_bound(plane, curve, n=DEFAULT_N, eq_tol=EQ_TOL, viol_tol=VIOLATION_TOL) -> VerificationReport:
    """``l_a(gamma) <= diam * l_a(S)/2`` in any plane (diameter in the norm)."""
    path = parametrize_unit_circle(plane, n)
    La = circle_perimeter_antinorm(plane, n, path)
    lhs = curve_length_antinorm(plane, curve)
    d, _ = diameter(plane, curve)
    cw, width = is_constant_width(plane, curve, eq_tol)
    rep = _report("RS_ANTINORM", plane, curve, lhs, d * La / 2, n, eq_tol, viol_tol)
    rep.details.update(diameter=d, antinorm_circle_length=La, constant_width=cw, width=width, agrees=cw == rep.equality)
    return rep


def verify_dual_bound(plane, curve, n=DEFAULT_N, eq_tol=EQ_TOL, viol_tol=VIOLATION_TOL, circle="norm") -> VerificationReport:
    """Norm length against the anti-norm diameter.

    ``circle="norm"`` uses ``diam_a * l(S)/2``. ``circle="antinorm"`` uses
    ``diam_a * l(S_a)/2`` where ``S_a`` is the anti-norm unit circle measured
    in the norm; this is the bound obtained by applying the anti-norm
    inequality inside the anti-norm plane, and the two agree on
    Radon-normalized planes.
    """
    if circle not in ("norm", "antinorm"):
        raise GeometryError("circle must be 'norm' or 'antinorm'")
    aplane = antinorm_plane(plane)
    lhs = curve_length(plane, curve)
    da, _ = diameter(aplane, curve)
    if circle == "norm":
        Lc = parametrize_unit_circle(plane, n).total_length
    else:
        Lc = curve_length(plane, unit_circle_curve(aplane, n))
    cw_a, width_a = is_constant_width(aplane, curve, eq_tol)
    rep = _report("RS_DUAL", plane, curve, lhs, da * Lc / 2, n, eq_tol, viol_tol)
    rep.details.update(
        circle=circle, antinorm_diameter=da, circle_length=Lc, constant_width_antinorm=cw_a,
        width_antinorm=width_a, agrees=cw_a == rep.equality,
    )
    return rep


def verify_barbier(plane, curve, n=DEFAULT_N, eq_tol=EQ_TOL) -> VerificationReport:
    """``l(gamma) = d * l(S)/2`` for a curve of constant width ``d`` in a Radon plane."""
    plane = _require_radon(plane, "verify_barbier")
    cw, d = is_constant_width(plane, curve, eq_tol)
    if not cw:
        raise GeometryError("verify_barbier needs a curve of constant width")
    L = parametrize_unit_circle(plane, n).total_length
    lhs = curve_length(plane, curve)
    bound = d * L / 2
    rep = _report("BARBIER", plane, curve, lhs, bound, n, eq_tol, eq_tol)
    rep.passed = abs(lhs - bound) <= eq_tol * bound
    rep.details.update(width=d, circle_length=L)
    return rep


def verify_curvature_sum(plane, curve, n=DEFAULT_N, n_pairs=256, eq_tol=EQ_TOL, curv_tol=CURVATURE_TOL) -> VerificationReport:
    """Sum of circular curvature radii at parallel support lines equals the width.

    ``lhs`` is the worst deviation ``max |rho0 + rho1 - d|`` and ``bound`` is
    ``curv_tol * d``.
    """
    cw, d = is_constant_width(plane, curve, eq_tol)
    if not cw:
        raise GeometryError("verify_curvature_sum needs a curve of constant width")
    path = parametrize_unit_circle(plane, n)
    sums = curvature_radius_sums(plane, curve, path, n_pairs)
    dev = float(np.max(np.abs(sums - d)))
    rep = _report("CURVATURE_SUM", plane, curve, dev, curv_tol * d, n, eq_tol, 0.0)
    rep.details.update(width=d, n_pairs=n_pairs, mean_sum=float(np.mean(sums)))
    return rep


def defect_integral(plane: NormedPlane, curve: ConvexCurve, path) -> float:
    """``D = int (omega(phi, gamma))' / omega(phi, phi') du`` as a sum of grid increments."""
    phi, dphi = path.points, path.tangents
    g = support_points(plane, curve, path)
    c = plane.omega_scale
    w = c * cross(phi, g)
    den = c * cross(phi, dphi)
    den_mid = 0.5 * (den + np.roll(den, -1))
    return float(np.sum((np.roll(w, -1) - w) / den_mid))


def verify_defect_integral(plane, curve, n=DEFAULT_N, eq_tol=EQ_TOL, viol_tol=VIOLATION_TOL) -> VerificationReport:
    """``l(gamma) <= diam * l(S)/2 + D`` in any plane; ``D`` vanishes for constant width."""
    path = parametrize_unit_circle(plane, n)
    L = path.total_length
    D = defect_integral(plane, curve, path)
    lhs = curve_length(plane, curve)
    d, _ = diameter(plane, curve)
    h_int = float(np.sum(minkowski_support(plane, curve, path)) * L / path.n)
    cw, _ = is_constant_width(plane, curve, eq_tol)
    rep = _report("DEFECT_INTEGRAL", plane, curve, lhs, d * L / 2 + D, n, eq_tol, viol_tol)
    rep.details.update(defect=D, support_integral=h_int, identity_residual=lhs - D - h_int, constant_width=cw)
    if cw:
        rep.passed = rep.passed and abs(D) <= eq_tol * lhs
    return rep


# -- open problem sweep -------------------------------------------------------


def _random_family_member(rng, n_harm: int, amplitude: float):
    """Disc radius and harmonics with ``sum (k^2 - 1)(|a_k| + |b_k|) < r0``."""
    r0 = amplitude * rng.uniform(0.1, 1.0)
    k = np.arange(2, n_harm + 2)
    a = rng.normal(size=n_harm)
    b = rng.normal(size=n_harm)
    budget = (k**2 - 1) * (np.abs(a) + np.abs(b))
    scale = rng.uniform(0.0, 0.95) * r0 / budget.sum()
    return r0, [(int(kk), float(x * scale), float(y * scale)) for kk, x, y in zip(k, a, b)]


def _ratio(plane, curve, L):
    d, _ = diameter(plane, curve)
    return curve_length(plane, curve) / (d * L / 2)


def explore_open_problem(plane: NormedPlane, count: int = 100, seed: int = 0, n: int = 1024,
                         n_harm: int = 6, amplitude: float = 0.3, tol: float = VIOLATION_TOL) -> dict:
    """Sweep random convex perturbations of the unit circle and record ``l / (diam l(S)/2)``.

    Members are the unit ball plus a small Euclidean disc plus random
    support harmonics of both parities (see :func:`perturbed_unit_circle`).
    Emits data only. Ratios above ``1 + tol`` are recomputed at four times
    the resolution and labelled ``COUNTEREXAMPLE-CANDIDATE`` only if they
    persist.
    """
    if is_radon(plane).radon:
        raise GeometryError("explore_open_problem needs a non-Radon plane; the inequality is proved for Radon planes")
    rng = np.random.default_rng(seed)
    L = parametrize_unit_circle(plane, max(n, 64)).total_length
    rows = []
    rejected = 0
    while len(rows) < count:
        r0, hs = _random_family_member(rng, n_harm, amplitude)
        try:
            curve = perturbed_unit_circle(plane, hs, r0, n)
        except ConvexityError:
            rejected += 1
            if rejected > 50 * count:
                raise GeometryError("too many non-convex samples; lower the amplitude")
            continue
        rows.append({"r0": r0, "harmonics": hs, "ratio": _ratio(plane, curve, L), "curve": curve.fingerprint()})
    ratios = np.array([r["ratio"] for r in rows])
    candidates = []
    for r in rows:
        if r["ratio"] > 1 + tol:
            fine = _ratio(plane, perturbed_unit_circle(plane, r["harmonics"], r["r0"], 4 * n), L)
            r["ratio_fine"] = fine
            if fine > 1 + tol:
                r["label"] = "COUNTEREXAMPLE-CANDIDATE"
                candidates.append(r)
    best = int(np.argmax(ratios))
    return {
        "plane": plane.fingerprint(),
        "seed": seed,
        "n": n,
        "count": count,
        "rejected": rejected,
        "amplitude": amplitude,
        "n_harmonics": n_harm,
        "tol": tol,
        "ratios": ratios.tolist(),
        "max_ratio": float(ratios[best]),
        "argmax": rows[best],
        "candidates": candidates,
    }
