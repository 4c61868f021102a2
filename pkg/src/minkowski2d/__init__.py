"""Convex curves in normed planes: norms, anti-norms, Radon planes and
perimeter/diameter inequalities."""

from .constructors import (
    ConvexityError,
    WidthSynthesisSpec,
    build_constant_width_curve,
    build_radon_plane,
    flat_harmonics,
    hausdorff_distance,
    lp_quarter_arc,
    perturbed_unit_circle,
    smooth_approximate,
)
from .curves import (
    ConvexCurve,
    circular_curvature,
    curvature_radius_sums,
    curve_length,
    curve_length_antinorm,
    diameter,
    ellipse,
    is_constant_width,
    minkowski_support,
    reuleaux_triangle,
    unit_circle_curve,
    width_in_direction,
)
from .kernels import BACKEND
from .norm_core import (
    GeometryError,
    NormedPlane,
    UnitBallSpec,
    antinorm_eval,
    antinorm_plane,
    ball_area,
    birkhoff_orthogonal,
    euclidean_plane,
    is_radon,
    lp_plane,
    norm_eval,
    polygon_plane,
    radon_normalize,
    regular_polygon,
    symplectic,
)
from .specs import load_curve, load_plane, named_curve, named_plane
from .unit_circle import (
    ArcLengthPath,
    circle_perimeter,
    circle_perimeter_antinorm,
    kepler_deviation,
    kepler_integral,
    parametrize_unit_circle,
)
from .verify import (
    VerificationReport,
    explore_open_problem,
    verify_antinorm_bound,
    verify_barbier,
    verify_curvature_sum,
    verify_defect_integral,
    verify_dual_bound,
    verify_rosenthal_szasz,
)

__version__ = "0.1.0"
