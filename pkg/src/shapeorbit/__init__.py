"""Similarity-invariant shape distances for compact convex bodies in R^2 and R^3.

The library normalizes bodies by their smallest enclosing ball and measures
shapes with a pseudometric that vanishes exactly on similarity orbits,
alongside the classical radii functionals, multiplicative containment
distances over the dilation and similarity groups, and automated verification
of the closed-form upper bounds relating them.
"""

from .bodies import (
    Body,
    Similarity,
    apply_similarity,
    ball,
    bodies_close,
    body_from_dict,
    body_to_dict,
    convex_hull_2d,
    dump_body,
    load_body,
    polytope,
    rounded,
    support,
)
from .bounds import (
    BoundReport,
    FunctionalProfile,
    bound_ball_stability,
    bound_diagram,
    bound_diameter,
    bound_inradius_refined,
    bound_inradius_simple,
    bound_jung_extremal,
    bound_trivial,
    check_all,
    functional_profile,
    jung_check,
    sim_sandwich,
)
from .errors import (
    BadParameter,
    DegenerateInput,
    DimensionMismatch,
    MissingHRep,
    NotNormalized,
    NumericalFailure,
    ParseError,
    ShapeOrbitError,
    UnsupportedDimension,
)
from .generators import (
    make_ball_polygon,
    make_cap,
    make_random_body,
    make_random_points_3d,
    make_regular_simplex,
    make_reuleaux_triangle,
    make_segment,
)
from .hausdorff import HausdorffResult, hausdorff_2d_exact, hausdorff_nd_bounds
from .metric import OrbitMetricResult, orbit_distance_normalized, pseudometric
from .minball import Circumball, smallest_enclosing_ball
from .radii import (
    Incircle,
    NormalizedBody,
    chebyshev_point,
    circumball,
    circumradius,
    diameter,
    inradius,
    normalize,
    width_2d,
)
from .shubert import CertifiedMinimum, lipschitz_minimize_1d
from .simdist import SimDistanceResult, containment_lp, d_dil, d_sim, rho_g
from .simplex import LinearProgram, LPResult, LPStatus, lp_solve
from .so3cover import so3_cover_minimize

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
