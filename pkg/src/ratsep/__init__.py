"""Exact rational separation for pointed convex sets.

Sets are given by generators (vertices and rays) with coordinates in a
fixed real quadratic field Q(sqrt(k)); every geometric decision is made
by exact sign determination.  The central operation, ``separate``,
returns a rational halfspace certificate that provably contains the set
and excludes an exterior query point, together with a full exact trace
of how it was built.  Around it: certificate verification, a 2-D
brute-force cross-check, a decision procedure for rational-parallel
directions, and an outer-approximation loop that iterates the oracle.
"""

from .approximation import GridSpec, OuterApprox, excess_measure, outer_approximate
from .certificates import (
    Certificate,
    brute_force_separator,
    rational_parallel_direction,
    verify_certificate,
)
from .errors import (
    DimensionMismatchError,
    NotPointedError,
    PointInSetError,
    SeparationBugError,
)
from .scalars import (
    QInterval,
    Surd,
    Vector,
    choose_rational_between,
    rational_in_ball,
    sqrt_convergents,
    sqrt_enclosure,
    surd_sign,
)
from .separation import (
    SeparationTrace,
    bound_support_on_ball,
    compute_wedge_parameters,
    find_barrier_direction,
    norm_upper,
    point_in_apex_hull,
    point_in_ball,
    separate,
    wedge_interior_ball,
)
from .sets import (
    BallSet,
    SupportValue,
    VPolyhedron,
    is_pointed,
    membership,
    polar_cone_contains,
    project,
    support_value,
)
from .svg import render_svg

__version__ = "0.1.0"

__all__ = [
    "Surd",
    "QInterval",
    "Vector",
    "surd_sign",
    "sqrt_convergents",
    "sqrt_enclosure",
    "rational_in_ball",
    "choose_rational_between",
    "VPolyhedron",
    "BallSet",
    "SupportValue",
    "support_value",
    "is_pointed",
    "polar_cone_contains",
    "membership",
    "project",
    "SeparationTrace",
    "norm_upper",
    "find_barrier_direction",
    "bound_support_on_ball",
    "compute_wedge_parameters",
    "wedge_interior_ball",
    "point_in_ball",
    "point_in_apex_hull",
    "separate",
    "Certificate",
    "verify_certificate",
    "brute_force_separator",
    "rational_parallel_direction",
    "OuterApprox",
    "GridSpec",
    "outer_approximate",
    "excess_measure",
    "render_svg",
    "DimensionMismatchError",
    "NotPointedError",
    "PointInSetError",
    "SeparationBugError",
]
