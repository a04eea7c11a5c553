"""Plane geometry kernel: poses, unit arcs, line segments, and cs paths.

All geometry lives in curvature-scaled units: the curvature bound is 1 and
every arc lies on a circle of radius 1. Angles are radians. Lengths in the
original problem units are recovered by dividing by the instance's kappa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

TWO_PI = 2.0 * math.pi
EPS = 1e-9

Point = tuple[float, float]


class ContinuityViolation(Exception):
    """Consecutive path segments fail to join C1-continuously within EPS."""


def norm_angle(theta: float) -> float:
    """Normalize an angle to (-pi, pi]. The tie at -pi maps to +pi."""
    t = math.fmod(theta, TWO_PI)
    if t <= -math.pi:
        t += TWO_PI
    elif t > math.pi:
        t -= TWO_PI
    return t


def mod2pi(theta: float) -> float:
    """Reduce an angle to [0, 2*pi).

    Values within EPS of 2*pi collapse to 0 so that angle differences
    polluted by roundoff cannot masquerade as a full extra turn.
    """
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI - EPS:
        t = 0.0
    return t


def p_dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def p_angle(a: Point, b: Point) -> float:
    """Polar angle of the vector from a to b."""
    return math.atan2(b[1] - a[1], b[0] - a[0])


@dataclass(frozen=True)
class Pose:
    """A point of the plane with a unit tangent direction."""

    x: float
    y: float
    theta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "theta", norm_angle(float(self.theta)))

    @property
    def position(self) -> Point:
        return (self.x, self.y)

    @property
    def direction(self) -> Point:
        return (math.cos(self.theta), math.sin(self.theta))

    @property
    def left_normal(self) -> Point:
        """Unit normal to the left of the heading (heading rotated +pi/2)."""
        return (-math.sin(self.theta), math.cos(self.theta))

    def moved(self, rotation: float, translation: Point = (0.0, 0.0)) -> "Pose":
        c, s = math.cos(rotation), math.sin(rotation)
        return Pose(
            c * self.x - s * self.y + translation[0],
            s * self.x + c * self.y + translation[1],
            self.theta + rotation,
        )

    def reflected(self) -> "Pose":
        """Mirror image across the x axis."""
        return Pose(self.x, -self.y, -self.theta)


def adjacent_circles(pose: Pose) -> tuple[Point, Point]:
    """Centres of the unit circles tangent at the pose, left then right."""
    nx, ny = pose.left_normal
    return (pose.x + nx, pose.y + ny), (pose.x - nx, pose.y - ny)


@dataclass(frozen=True)
class AdjacentCircles:
    """The four tangent unit-circle centres of an endpoint configuration."""

    cl_x: Point
    cr_x: Point
    cl_y: Point
    cr_y: Point

    @classmethod
    def of(cls, start: Pose, end: Pose) -> "AdjacentCircles":
        cl_x, cr_x = adjacent_circles(start)
        cl_y, cr_y = adjacent_circles(end)
        return cls(cl_x, cr_x, cl_y, cr_y)


@dataclass(frozen=True)
class ProblemInstance:
    """Two poses and a positive curvature bound.

    Computations run in the scaled frame where the bound is 1; reported
    lengths are converted back to the original units by the callers.
    """

    start: Pose
    end: Pose
    kappa: float = 1.0

    def __post_init__(self) -> None:
        if not self.kappa > 0.0:
            raise ValueError(f"kappa must be positive, got {self.kappa}")

    def scaled(self) -> "ProblemInstance":
        if self.kappa == 1.0:
            return self
        k = self.kappa
        return ProblemInstance(
            Pose(self.start.x * k, self.start.y * k, self.start.theta),
            Pose(self.end.x * k, self.end.y * k, self.end.theta),
            1.0,
        )

    def moved(self, rotation: float, translation: Point = (0.0, 0.0)) -> "ProblemInstance":
        return ProblemInstance(
            self.start.moved(rotation, translation),
            self.end.moved(rotation, translation),
            self.kappa,
        )

    def reflected(self) -> "ProblemInstance":
        return ProblemInstance(self.start.reflected(), self.end.reflected(), self.kappa)


@dataclass(frozen=True)
class Arc:
    """A unit-circle arc.

    ``start_angle`` is the polar angle of the entry point as seen from the
    centre; ``sweep`` is the traversed angle (equal to the arc length), with
    the sign of the turning carried by the orientation: "L" turns
    counterclockwise (+1 curvature), "R" clockwise (-1).
    """

    center: Point
    orientation: str
    start_angle: float
    sweep: float

    def __post_init__(self) -> None:
        if self.orientation not in ("L", "R"):
            raise ValueError(f"orientation must be 'L' or 'R', got {self.orientation!r}")
        if self.sweep < 0.0:
            raise ValueError(f"arc sweep must be >= 0, got {self.sweep}")

    @property
    def length(self) -> float:
        return self.sweep

    @property
    def signed_sweep(self) -> float:
        return self.sweep if self.orientation == "L" else -self.sweep

    def angle_at(self, s: float) -> float:
        return self.start_angle + s if self.orientation == "L" else self.start_angle - s

    def point_at(self, s: float) -> Point:
        a = self.angle_at(s)
        return (self.center[0] + math.cos(a), self.center[1] + math.sin(a))

    def heading_at(self, s: float) -> float:
        a = self.angle_at(s)
        return a + math.pi / 2 if self.orientation == "L" else a - math.pi / 2

    def pose_at(self, s: float) -> Pose:
        p = self.point_at(s)
        return Pose(p[0], p[1], self.heading_at(s))


@dataclass(frozen=True)
class Line:
    start: Point
    end: Point

    @property
    def length(self) -> float:
        return p_dist(self.start, self.end)

    @property
    def heading(self) -> float:
        return p_angle(self.start, self.end)

    def point_at(self, s: float) -> Point:
        n = self.length
        if n <= EPS:
            return self.start
        t = s / n
        return (
            self.start[0] + t * (self.end[0] - self.start[0]),
            self.start[1] + t * (self.end[1] - self.start[1]),
        )


Segment = Union[Arc, Line]


def arc_from_pose(pose: Pose, orientation: str, sweep: float) -> Arc:
    """The arc that leaves the pose tangentially, turning left or right."""
    nx, ny = pose.left_normal
    if orientation == "L":
        center = (pose.x + nx, pose.y + ny)
        start_angle = pose.theta - math.pi / 2
    else:
        center = (pose.x - nx, pose.y - ny)
        start_angle = pose.theta + math.pi / 2
    return Arc(center, orientation, start_angle, sweep)


def line_from_pose(pose: Pose, length: float) -> Line:
    dx, dy = pose.direction
    return Line(pose.position, (pose.x + length * dx, pose.y + length * dy))


@dataclass(frozen=True)
class CsPath:
    """A C1 concatenation of unit arcs and line segments.

    The junction poses are validated lazily: every traversal raises
    ContinuityViolation if a segment does not start where and in the
    direction the previous one ended (within EPS).
    """

    start: Pose
    segments: tuple[Segment, ...] = ()

    @property
    def length(self) -> float:
        return sum(seg.length for seg in self.segments)

    @property
    def turning(self) -> float:
        """Total signed turning: L arcs count +sweep, R arcs -sweep."""
        return sum(seg.signed_sweep for seg in self.segments if isinstance(seg, Arc))

    @property
    def complexity(self) -> int:
        """Number of non-degenerate segments (length > EPS)."""
        return sum(1 for seg in self.segments if seg.length > EPS)

    def poses(self) -> list[Pose]:
        """Junction poses from start to endpoint, validating continuity."""
        out = [self.start]
        cur = self.start
        for i, seg in enumerate(self.segments):
            cur = _advance(cur, seg, i)
            out.append(cur)
        return out

    def endpoint(self) -> Pose:
        return self.poses()[-1]

    def pose_at(self, s: float) -> Pose:
        """Pose after arc length s from the start (s clamped to [0, length])."""
        s = min(max(s, 0.0), self.length)
        cur = self.start
        for i, seg in enumerate(self.segments):
            if s <= seg.length:
                if isinstance(seg, Arc):
                    return seg.pose_at(s)
                if seg.length <= EPS:
                    return cur
                p = seg.point_at(s)
                return Pose(p[0], p[1], seg.heading)
            s -= seg.length
            cur = _advance(cur, seg, i)
        return cur

    def sample(self, step: float) -> list[tuple[float, Point, float]]:
        """Evenly spaced (arclength, point, heading) samples, endpoints included.

        Headings are unwrapped (continuous along the path), not normalized.
        """
        if step <= 0.0:
            raise ValueError("step must be positive")
        total = self.length
        if total <= 0.0:
            return [(0.0, self.start.position, self.start.theta)]
        n = max(1, math.ceil(total / step))
        ds = total / n
        targets = [i * ds for i in range(n + 1)]
        targets[-1] = total

        out: list[tuple[float, Point, float]] = []
        seg_start_s = 0.0
        heading_in = self.start.theta
        cur = self.start
        it = iter(enumerate(self.segments))
        i, seg = next(it, (None, None))
        for s in targets:
            while seg is not None and s > seg_start_s + seg.length + 1e-12:
                seg_start_s += seg.length
                if isinstance(seg, Arc):
                    heading_in += seg.signed_sweep
                cur = _advance(cur, seg, i)
                i, seg = next(it, (None, None))
            if seg is None:
                out.append((s, cur.position, heading_in))
                continue
            local = min(max(s - seg_start_s, 0.0), seg.length)
            if isinstance(seg, Arc):
                out.append((s, seg.point_at(local), heading_in + (local if seg.orientation == "L" else -local)))
            else:
                out.append((s, seg.point_at(local), heading_in))
        return out

    def subpath(self, a: float, b: float) -> "CsPath":
        """The restriction of the path to arc lengths [a, b]."""
        total = self.length
        a = min(max(a, 0.0), total)
        b = min(max(b, a), total)
        start_pose = self.pose_at(a)
        segs: list[Segment] = []
        offset = 0.0
        for seg in self.segments:
            lo = max(a - offset, 0.0)
            hi = min(b - offset, seg.length)
            if hi - lo > EPS:
                if isinstance(seg, Arc):
                    segs.append(Arc(seg.center, seg.orientation, seg.angle_at(lo), hi - lo))
                else:
                    segs.append(Line(seg.point_at(lo), seg.point_at(hi)))
            offset += seg.length
            if offset >= b:
                break
        return CsPath(start_pose, tuple(segs))


def _advance(cur: Pose, seg: Segment, index: int) -> Pose:
    """Exit pose of a segment entered at cur, validating the junction."""
    if isinstance(seg, Arc):
        entry = seg.pose_at(0.0)
        if p_dist(entry.position, cur.position) > EPS or abs(norm_angle(entry.theta - cur.theta)) > EPS:
            raise ContinuityViolation(f"segment {index}: arc entry {entry} does not match {cur}")
        return seg.pose_at(seg.sweep)
    if p_dist(seg.start, cur.position) > EPS:
        raise ContinuityViolation(f"segment {index}: line start {seg.start} does not match {cur.position}")
    if seg.length <= EPS:
        return Pose(seg.end[0], seg.end[1], cur.theta)
    if abs(norm_angle(seg.heading - cur.theta)) > EPS:
        raise ContinuityViolation(f"segment {index}: line heading {seg.heading} does not match {cur.theta}")
    return Pose(seg.end[0], seg.end[1], seg.heading)


def path_from_moves(start: Pose, moves: Iterable[tuple[str, float]]) -> CsPath:
    """Build a cs path from relative moves ("L"/"R", sweep) and ("S", length)."""
    segs: list[Segment] = []
    cur = start
    for kind, amount in moves:
        if amount < 0.0:
            raise ValueError(f"move amounts must be >= 0, got {kind} {amount}")
        if kind in ("L", "R"):
            seg: Segment = arc_from_pose(cur, kind, amount)
        elif kind == "S":
            seg = line_from_pose(cur, amount)
        else:
            raise ValueError(f"unknown move kind {kind!r}")
        segs.append(seg)
        cur = _advance(cur, seg, len(segs) - 1)
    return CsPath(start, tuple(segs))


def path_length(path: CsPath) -> float:
    return path.length


def path_endpoint(path: CsPath) -> Pose:
    return path.endpoint()


def sample(path: CsPath, step: float) -> list[tuple[float, Point, float]]:
    return path.sample(step)


def apply_rigid_motion(path: CsPath, rotation: float, translation: Point = (0.0, 0.0)) -> CsPath:
    """Rotate about the origin then translate. Lengths are preserved."""
    c, s = math.cos(rotation), math.sin(rotation)

    def mp(p: Point) -> Point:
        return (c * p[0] - s * p[1] + translation[0], s * p[0] + c * p[1] + translation[1])

    segs: list[Segment] = []
    for seg in path.segments:
        if isinstance(seg, Arc):
            segs.append(Arc(mp(seg.center), seg.orientation, seg.start_angle + rotation, seg.sweep))
        else:
            segs.append(Line(mp(seg.start), mp(seg.end)))
    return CsPath(path.start.moved(rotation, translation), tuple(segs))


def reflect(path: CsPath) -> CsPath:
    """Mirror across the x axis; swaps every L arc with an R arc."""
    segs: list[Segment] = []
    for seg in path.segments:
        if isinstance(seg, Arc):
            segs.append(
                Arc(
                    (seg.center[0], -seg.center[1]),
                    "R" if seg.orientation == "L" else "L",
                    -seg.start_angle,
                    seg.sweep,
                )
            )
        else:
            segs.append(Line((seg.start[0], -seg.start[1]), (seg.end[0], -seg.end[1])))
    return CsPath(path.start.reflected(), tuple(segs))


def concat(first: CsPath, second: CsPath) -> CsPath:
    end = first.endpoint()
    if p_dist(end.position, second.start.position) > EPS or abs(norm_angle(end.theta - second.start.theta)) > EPS:
        raise ContinuityViolation(f"cannot concatenate: {end} does not match {second.start}")
    return CsPath(first.start, first.segments + second.segments)


def insert_loop(path: CsPath, junction: int, orientation: str) -> CsPath:
    """Insert one full circle at a junction, tangent on the given side.

    junction ranges over 0..len(segments); the loop lives on the adjacent
    circle of the junction pose, so C1 continuity is automatic.
    """
    if not 0 <= junction <= len(path.segments):
        raise IndexError(f"junction {junction} out of range")
    poses = path.poses()
    loop = arc_from_pose(poses[junction], orientation, TWO_PI)
    segs = path.segments[:junction] + (loop,) + path.segments[junction:]
    return CsPath(path.start, segs)
