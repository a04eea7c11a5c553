"""The six base path types between two poses and the global length minimiser.

Constructions follow the tangent geometry of the four adjacent circles:
outer tangents for LSL/RSR, inner tangents for LSR/RSL (requires centre
distance >= 2), and a circumscribed middle circle for LRL/RLR (requires
centre distance <= 4, two middle-circle choices when strictly inside).
All candidates live in the curvature-scaled frame (unit turning radius).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .geometry import (
    EPS,
    Arc,
    CsPath,
    Line,
    Point,
    Pose,
    ProblemInstance,
    adjacent_circles,
    mod2pi,
    p_angle,
    p_dist,
)


class BaseType(Enum):
    LSL = "LSL"
    RSR = "RSR"
    LSR = "LSR"
    RSL = "RSL"
    LRL = "LRL"
    RLR = "RLR"

    @property
    def letters(self) -> str:
        return self.value

    def is_symmetric(self) -> bool:
        """Both outer arcs share one orientation (lsl, rsr)."""
        return self in (BaseType.LSL, BaseType.RSR)

    def is_skew(self) -> bool:
        """Outer arcs have opposite orientations (lsr, rsl)."""
        return self in (BaseType.LSR, BaseType.RSL)

    def is_ccc(self) -> bool:
        return self in (BaseType.LRL, BaseType.RLR)


BASE_ORDER = [BaseType.LSL, BaseType.RSR, BaseType.LSR, BaseType.RSL, BaseType.LRL, BaseType.RLR]


@dataclass(frozen=True)
class BaseCandidate:
    """A realizable base path. Lengths are in curvature-scaled units."""

    base_type: BaseType
    path: CsPath
    length: float
    variant: int = 0

    @property
    def type_order(self) -> int:
        return BASE_ORDER.index(self.base_type)


def _circle(pose: Pose, side: str) -> Point:
    cl, cr = adjacent_circles(pose)
    return cl if side == "L" else cr


def _angle_on(center: Point, pose: Pose) -> float:
    return p_angle(center, pose.position)


def _csc(inst: ProblemInstance, t: BaseType) -> list[BaseCandidate]:
    first, _, last = t.letters
    c1 = _circle(inst.start, first)
    c2 = _circle(inst.end, last)
    a0 = _angle_on(c1, inst.start)
    af = _angle_on(c2, inst.end)
    d = p_dist(c1, c2)

    if t.is_symmetric():
        if d <= EPS:
            # Coincident circles: the whole path is one (possibly zero) arc.
            sweep = mod2pi(af - a0) if first == "L" else mod2pi(a0 - af)
            end = inst.end.position
            segs = (
                Arc(c1, first, a0, sweep),
                Line(end, end),
                Arc(c2, last, af, 0.0),
            )
            path = CsPath(inst.start, segs)
            return [BaseCandidate(t, path, path.length)]
        psi = p_angle(c1, c2)
        a_t = psi - math.pi / 2 if first == "L" else psi + math.pi / 2
        sweep1 = mod2pi(a_t - a0) if first == "L" else mod2pi(a0 - a_t)
        sweep2 = mod2pi(af - a_t) if last == "L" else mod2pi(a_t - af)
        p1 = (c1[0] + math.cos(a_t), c1[1] + math.sin(a_t))
        p2 = (c2[0] + math.cos(a_t), c2[1] + math.sin(a_t))
        segs = (Arc(c1, first, a0, sweep1), Line(p1, p2), Arc(c2, last, a_t, sweep2))
        path = CsPath(inst.start, segs)
        return [BaseCandidate(t, path, path.length)]

    # Skew: inner tangent, needs centre distance >= 2.
    if d < 2.0:
        return []
    phi = math.acos(min(2.0 / d, 1.0))
    psi = p_angle(c1, c2)
    beta = psi - phi if first == "L" else psi + phi
    p1 = (c1[0] + math.cos(beta), c1[1] + math.sin(beta))
    p2 = (c2[0] - math.cos(beta), c2[1] - math.sin(beta))
    sweep1 = mod2pi(beta - a0) if first == "L" else mod2pi(a0 - beta)
    b0 = beta + math.pi
    sweep2 = mod2pi(af - b0) if last == "L" else mod2pi(b0 - af)
    segs = (Arc(c1, first, a0, sweep1), Line(p1, p2), Arc(c2, last, b0, sweep2))
    path = CsPath(inst.start, segs)
    return [BaseCandidate(t, path, path.length)]


def _ccc(inst: ProblemInstance, t: BaseType) -> list[BaseCandidate]:
    outer, middle, _ = t.letters
    c1 = _circle(inst.start, outer)
    c2 = _circle(inst.end, outer)
    a0 = _angle_on(c1, inst.start)
    af = _angle_on(c2, inst.end)
    d = p_dist(c1, c2)
    if d <= EPS or d > 4.0:
        return []
    psi = p_angle(c1, c2)
    half = math.acos(min(d / 4.0, 1.0))

    out = []
    sides = (half, -half) if half > EPS else (half,)
    for variant, offset in enumerate(sides):
        u1 = psi + offset  # tangency direction c1 -> middle centre
        c3 = (c1[0] + 2.0 * math.cos(u1), c1[1] + 2.0 * math.sin(u1))
        u2 = p_angle(c2, c3)
        v1, v2 = u1 + math.pi, u2 + math.pi
        if outer == "L":
            sweep1 = mod2pi(u1 - a0)
            sweep_mid = mod2pi(v1 - v2)
            sweep2 = mod2pi(af - u2)
        else:
            sweep1 = mod2pi(a0 - u1)
            sweep_mid = mod2pi(v2 - v1)
            sweep2 = mod2pi(u2 - af)
        segs = (
            Arc(c1, outer, a0, sweep1),
            Arc(c3, middle, v1, sweep_mid),
            Arc(c2, outer, u2, sweep2),
        )
        path = CsPath(inst.start, segs)
        out.append(BaseCandidate(t, path, path.length, variant))
    return out


def solve_base(inst: ProblemInstance, t: BaseType) -> list[BaseCandidate]:
    """All realizable candidates of one base type (possibly none)."""
    scaled = inst.scaled()
    return _ccc(scaled, t) if t.is_ccc() else _csc(scaled, t)


def all_base_candidates(inst: ProblemInstance) -> list[BaseCandidate]:
    out: list[BaseCandidate] = []
    for t in BASE_ORDER:
        out.extend(solve_base(inst, t))
    return out


def middle_sweep(candidate: BaseCandidate) -> float:
    """Sweep of the middle arc of a CCC candidate."""
    assert candidate.base_type.is_ccc()
    seg = candidate.path.segments[1]
    assert isinstance(seg, Arc)
    return seg.sweep


def dubins_minimum(inst: ProblemInstance) -> BaseCandidate:
    """The global length minimiser: CSC, or CCC with middle arc above pi."""
    candidates = [
        c for c in all_base_candidates(inst)
        if not c.base_type.is_ccc() or middle_sweep(c) > math.pi
    ]
    assert candidates, "LSL and RSR are always realizable"
    return min(candidates, key=lambda c: (c.length, c.type_order, c.variant))
