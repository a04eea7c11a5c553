"""Turning numbers, class indices, and proximity classification.

The class index n of a path is fixed by the absolute convention
total turning = principal heading change + 2*pi*n, so the most direct
heading change lands in class 0. Two paths with the same endpoint
condition and different n lie in different connected components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dubins import all_base_candidates
from .errors import PreconditionViolation
from .geometry import (
    EPS,
    TWO_PI,
    CsPath,
    Pose,
    ProblemInstance,
    adjacent_circles,
    norm_angle,
    p_dist,
)
from .intersect import count_transversal_crossings, is_embedded
from .oracle import BangBangPath, try_lengthen_in_class

PROXIMITY_THRESHOLD = 4.0


@dataclass(frozen=True)
class TurningData:
    total_turning: float
    principal_delta: float
    class_index: int


@dataclass(frozen=True)
class ProximityReport:
    d_ll: float
    d_rr: float
    condition: str  # "I" | "II" | "III" | "IV"
    label: str  # "A" | "B" | "C" | "D"
    heuristic: bool  # True when the C/D split was decided heuristically


def turning_data(path: CsPath) -> TurningData:
    total = path.turning
    delta = norm_angle(path.endpoint().theta - path.start.theta)
    n_real = (total - delta) / TWO_PI
    n = round(n_real)
    assert abs(n_real - n) <= 1e-6, f"turning {total} and delta {delta} disagree"
    return TurningData(total, delta, n)


def class_of(path: CsPath) -> int:
    return turning_data(path).class_index


def classify_proximity(
    inst: ProblemInstance,
    seed: int = 0,
    embedded_predicate=None,
) -> ProximityReport:
    """Proximity condition (i)-(iv) and the A/B/C/D label.

    Under condition (iv) the C/D split comes from the pluggable embedded
    class predicate (has_embedded_class by default) and the report carries
    heuristic=True.
    """
    scaled = inst.scaled()
    cl_x, cr_x = adjacent_circles(scaled.start)
    cl_y, cr_y = adjacent_circles(scaled.end)
    d_ll = p_dist(cl_x, cl_y)
    d_rr = p_dist(cr_x, cr_y)
    t = PROXIMITY_THRESHOLD
    if d_ll >= t and d_rr >= t:
        return ProximityReport(d_ll, d_rr, "I", "A", False)
    if d_ll < t <= d_rr:
        return ProximityReport(d_ll, d_rr, "II", "B", False)
    if d_rr < t <= d_ll:
        return ProximityReport(d_ll, d_rr, "III", "B", False)
    predicate = embedded_predicate or has_embedded_class
    label = "D" if predicate(inst, seed=seed) else "C"
    return ProximityReport(d_ll, d_rr, "IV", label, True)


def _canonical(inst: ProblemInstance) -> ProblemInstance:
    """Rigid-invariant frame: start at the origin heading +x, rounded.

    Classification under condition (iv) involves a seeded random search;
    canonicalizing first makes the outcome invariant under rigid motions
    of the instance.
    """
    scaled = inst.scaled()
    rot = scaled.moved(-scaled.start.theta)
    out = rot.moved(0.0, (-rot.start.x, -rot.start.y))
    e = out.end
    return ProblemInstance(
        Pose(0.0, 0.0, 0.0),
        Pose(round(e.x, 12), round(e.y, 12), round(e.theta, 12)),
    )


def has_embedded_class(inst: ProblemInstance, seed: int = 0) -> bool:
    """Best-effort predicate for proximity condition D.

    Looks for a loop-free, non-degenerate, embedded base candidate whose
    class resists a budgeted local-deformation search trying to grow its
    length past length + 2*pi. Callers must treat the outcome as heuristic.
    """
    report_inst = _canonical(inst)
    cl_x, cr_x = adjacent_circles(report_inst.start)
    cl_y, cr_y = adjacent_circles(report_inst.end)
    if (p_dist(cl_x, cl_y) >= PROXIMITY_THRESHOLD
            or p_dist(cr_x, cr_y) >= PROXIMITY_THRESHOLD):
        raise PreconditionViolation("embedded-class predicate requires proximity condition (iv)")
    e = report_inst.end
    return _embedded_cached(e.x, e.y, e.theta, seed)


@lru_cache(maxsize=256)
def _embedded_cached(ex: float, ey: float, etheta: float, seed: int) -> bool:
    inst = ProblemInstance(Pose(0.0, 0.0, 0.0), Pose(ex, ey, etheta))
    candidates = sorted(all_base_candidates(inst), key=lambda c: (c.length, c.type_order))
    for cand in candidates:
        if cand.length <= EPS:
            continue  # the empty path is not an embedded-class witness
        if not is_embedded(cand.path):
            continue
        witness = _as_bang_bang(cand.path)
        escaped = try_lengthen_in_class(inst, witness, cand.length + TWO_PI, seed=seed)
        if not escaped:
            return True
    return False


def _as_bang_bang(path: CsPath) -> BangBangPath:
    pieces: list[tuple[int, float]] = []
    for seg in path.segments:
        if seg.length <= EPS:
            continue
        sign = (1 if seg.orientation == "L" else -1) if hasattr(seg, "orientation") else 0
        if pieces and pieces[-1][0] == sign:
            pieces[-1] = (sign, pieces[-1][1] + seg.length)
        else:
            pieces.append((sign, seg.length))
    return BangBangPath(path.start, tuple(pieces))


def count_crossings(path: CsPath) -> int:
    """Exact transversal self-intersections of a cs path."""
    return count_transversal_crossings(path)
