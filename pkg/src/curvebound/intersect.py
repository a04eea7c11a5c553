"""Transversal self-intersection detection for cs paths.

Crossings are reported as pairs of arc-length parameters (s1, s2) with
s1 < s2. Tangential touches (tangents parallel or antiparallel within
ANGLE_TOL) are not counted, and neither are junction coincidences where
the two parameters are closer than PARAM_TOL along the path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import EPS, Arc, CsPath, Line, Point, Segment, norm_angle

ANGLE_TOL = 1e-6
PARAM_TOL = 1e-7


@dataclass(frozen=True)
class Crossing:
    s1: float
    s2: float
    point: Point


def _arc_params(arc: Arc, point: Point) -> list[float]:
    """All arc-length parameters at which the arc passes through the point."""
    phi = math.atan2(point[1] - arc.center[1], point[0] - arc.center[0])
    if arc.orientation == "L":
        d0 = math.fmod(phi - arc.start_angle, 2 * math.pi)
    else:
        d0 = math.fmod(arc.start_angle - phi, 2 * math.pi)
    if d0 < 0.0:
        d0 += 2 * math.pi
    if d0 > 2 * math.pi - 1e-12:
        d0 = 0.0
    out = []
    s = d0
    while s <= arc.sweep + 1e-12:
        out.append(min(s, arc.sweep))
        s += 2 * math.pi
    return out


def _line_param(line: Line, point: Point) -> list[float]:
    n = line.length
    if n <= EPS:
        return []
    t = ((point[0] - line.start[0]) * (line.end[0] - line.start[0]) +
         (point[1] - line.start[1]) * (line.end[1] - line.start[1])) / n
    if -1e-12 <= t <= n + 1e-12:
        return [min(max(t, 0.0), n)]
    return []


def _line_line_points(a: Line, b: Line) -> list[Point]:
    ax, ay = a.end[0] - a.start[0], a.end[1] - a.start[1]
    bx, by = b.end[0] - b.start[0], b.end[1] - b.start[1]
    det = ax * by - ay * bx
    if abs(det) <= 1e-14:
        return []
    dx, dy = b.start[0] - a.start[0], b.start[1] - a.start[1]
    t = (dx * by - dy * bx) / det
    u = (dx * ay - dy * ax) / det
    if -1e-12 <= t <= 1.0 + 1e-12 and -1e-12 <= u <= 1.0 + 1e-12:
        return [(a.start[0] + t * ax, a.start[1] + t * ay)]
    return []


def _line_circle_points(line: Line, center: Point) -> list[Point]:
    n = line.length
    if n <= EPS:
        return []
    ux, uy = (line.end[0] - line.start[0]) / n, (line.end[1] - line.start[1]) / n
    wx, wy = center[0] - line.start[0], center[1] - line.start[1]
    m = ux * wx + uy * wy
    disc = m * m - (wx * wx + wy * wy) + 1.0
    if disc < 0.0:
        return []
    r = math.sqrt(disc)
    pts = []
    for t in (m - r, m + r):
        if -1e-12 <= t <= n + 1e-12:
            pts.append((line.start[0] + t * ux, line.start[1] + t * uy))
    return pts


def _circle_circle_points(c1: Point, c2: Point) -> list[Point]:
    d = math.hypot(c2[0] - c1[0], c2[1] - c1[1])
    if d <= EPS or d > 2.0:
        # Coincident circles overlap tangentially; d > 2 means disjoint.
        return []
    a = d / 2.0
    h2 = 1.0 - a * a
    h = math.sqrt(h2) if h2 > 0.0 else 0.0
    mx, my = (c1[0] + c2[0]) / 2.0, (c1[1] + c2[1]) / 2.0
    px, py = -(c2[1] - c1[1]) / d, (c2[0] - c1[0]) / d
    if h == 0.0:
        return [(mx, my)]
    return [(mx + h * px, my + h * py), (mx - h * px, my - h * py)]


def _pair_points(a: Segment, b: Segment) -> list[Point]:
    if isinstance(a, Line) and isinstance(b, Line):
        return _line_line_points(a, b)
    if isinstance(a, Line) and isinstance(b, Arc):
        return [p for p in _line_circle_points(a, b.center) if _arc_params(b, p)]
    if isinstance(a, Arc) and isinstance(b, Line):
        return [p for p in _line_circle_points(b, a.center) if _arc_params(a, p)]
    assert isinstance(a, Arc) and isinstance(b, Arc)
    return [p for p in _circle_circle_points(a.center, b.center)
            if _arc_params(a, p) and _arc_params(b, p)]


def _params_on(seg: Segment, point: Point) -> list[float]:
    return _arc_params(seg, point) if isinstance(seg, Arc) else _line_param(seg, point)


def _heading_on(seg: Segment, s: float) -> float:
    return seg.heading_at(s) if isinstance(seg, Arc) else seg.heading


def find_self_intersections(path: CsPath) -> list[Crossing]:
    """All transversal self-crossings, sorted by (s2, s1)."""
    segs = path.segments
    offsets = [0.0]
    for seg in segs:
        offsets.append(offsets[-1] + seg.length)
    total = offsets[-1]
    closed = path.length > EPS and (
        math.hypot(path.start.x - path.pose_at(total).x, path.start.y - path.pose_at(total).y) <= 1e-7
    )

    events: list[Crossing] = []
    for i in range(len(segs)):
        for j in range(i, len(segs)):
            a, b = segs[i], segs[j]
            if a.length <= EPS or b.length <= EPS:
                continue
            if i == j:
                continue  # a single line or circular arc never crosses itself transversally
            for p in _pair_points(a, b):
                for sa in _params_on(a, p):
                    for sb in _params_on(b, p):
                        s1, s2 = offsets[i] + sa, offsets[j] + sb
                        if s2 - s1 <= PARAM_TOL:
                            continue
                        if closed and s1 <= PARAM_TOL and s2 >= total - PARAM_TOL:
                            continue  # the closure point of a closed path
                        h1 = _heading_on(a, sa)
                        h2 = _heading_on(b, sb)
                        d = abs(norm_angle(h1 - h2))
                        if min(d, math.pi - d) <= ANGLE_TOL:
                            continue  # tangential touch
                        events.append(Crossing(s1, s2, p))

    events.sort(key=lambda c: (c.s2, c.s1))
    unique: list[Crossing] = []
    for ev in events:
        if any(abs(ev.s1 - u.s1) <= PARAM_TOL and abs(ev.s2 - u.s2) <= PARAM_TOL for u in unique):
            continue
        unique.append(ev)
    unique.sort(key=lambda c: (c.s2, c.s1))
    return unique


def count_transversal_crossings(path: CsPath) -> int:
    return len(find_self_intersections(path))


def is_embedded(path: CsPath) -> bool:
    return not find_self_intersections(path)


def first_self_intersection(path: CsPath) -> Crossing:
    """The crossing with the smallest second parameter (ties: largest first)."""
    events = find_self_intersections(path)
    if not events:
        from .errors import NoSelfIntersection

        raise NoSelfIntersection("path has no transversal self-intersection")
    return min(events, key=lambda c: (c.s2, -c.s1))
