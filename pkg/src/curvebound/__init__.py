"""Length-minimising bounded-curvature paths within homotopy classes.

The package solves for the shortest path of curvature at most kappa between
two poses in the plane, restricted to any connected component (class index)
of the path space, and ships a normaliser for sampled paths, a brute-force
verification oracle, a CLI, and an HTTP service.
"""

from .classes import (
    ProximityReport,
    TurningData,
    class_of,
    classify_proximity,
    has_embedded_class,
    turning_data,
)
from .dubins import BaseCandidate, BaseType, all_base_candidates, dubins_minimum, solve_base
from .errors import (
    BudgetExhausted,
    ContinuityViolation,
    CurvatureViolation,
    NoReplacement,
    NoSelfIntersection,
    PreconditionViolation,
)
from .geometry import (
    Arc,
    CsPath,
    Line,
    Pose,
    ProblemInstance,
    adjacent_circles,
    apply_rigid_motion,
    concat,
    insert_loop,
    path_endpoint,
    path_from_moves,
    path_length,
    reflect,
    sample,
)
from .intersect import count_transversal_crossings, find_self_intersections, is_embedded
from .minimiser import (
    LoopedCandidate,
    MinimiserResult,
    class_length_profile,
    enumerate_candidates,
    minimise_in_class,
)
from .normalise import Fragmentation, SampledPath, fragment, normalise, replace_fragment
from .oracle import (
    BangBangPath,
    OracleBudget,
    OracleResult,
    check_loop_bound,
    check_radial_bound,
    oracle_min_in_class,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "BangBangPath",
    "BaseCandidate",
    "BaseType",
    "BudgetExhausted",
    "ContinuityViolation",
    "CsPath",
    "CurvatureViolation",
    "Fragmentation",
    "Line",
    "LoopedCandidate",
    "MinimiserResult",
    "NoReplacement",
    "NoSelfIntersection",
    "OracleBudget",
    "OracleResult",
    "Pose",
    "PreconditionViolation",
    "ProblemInstance",
    "ProximityReport",
    "SampledPath",
    "TurningData",
    "adjacent_circles",
    "all_base_candidates",
    "apply_rigid_motion",
    "check_loop_bound",
    "check_radial_bound",
    "class_length_profile",
    "class_of",
    "classify_proximity",
    "concat",
    "count_transversal_crossings",
    "dubins_minimum",
    "enumerate_candidates",
    "find_self_intersections",
    "fragment",
    "has_embedded_class",
    "insert_loop",
    "is_embedded",
    "minimise_in_class",
    "normalise",
    "oracle_min_in_class",
    "path_endpoint",
    "path_from_moves",
    "path_length",
    "reflect",
    "replace_fragment",
    "sample",
    "solve_base",
    "turning_data",
]
