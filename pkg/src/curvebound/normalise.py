"""Fragmentation and replacement of sampled bounded-curvature paths.

A sampled path is cut into fragments shorter than one turning radius, and
each fragment is swapped for the shortest CSC path (arc sweeps below pi)
between its endpoint poses. The concatenation is a cs path that is never
longer than the input and keeps its class index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .classes import class_of
from .dubins import BaseType, solve_base
from .errors import CurvatureViolation, NoReplacement
from .geometry import EPS, TWO_PI, CsPath, Pose, ProblemInstance, Segment, norm_angle

FRAGMENT_TARGET = 0.9
MAX_SPACING = 0.05
_CSC_TYPES = (BaseType.LSL, BaseType.RSR, BaseType.LSR, BaseType.RSL)


@dataclass(frozen=True)
class SampledPath:
    """Arc-length samples (s, x, y, theta) with a declared curvature bound.

    Headings are unwrapped on construction so turning integrals are exact.
    """

    s: np.ndarray
    x: np.ndarray
    y: np.ndarray
    theta: np.ndarray
    kappa: float = 1.0

    @classmethod
    def from_records(cls, records: Sequence[dict], kappa: float = 1.0) -> "SampledPath":
        s = np.asarray([r["s"] for r in records], dtype=float)
        x = np.asarray([r["x"] for r in records], dtype=float)
        y = np.asarray([r["y"] for r in records], dtype=float)
        theta = np.unwrap(np.asarray([r["theta"] for r in records], dtype=float))
        return cls(s, x, y, theta, kappa)

    @classmethod
    def from_cs_path(cls, path: CsPath, step: float = 0.04, kappa: float = 1.0) -> "SampledPath":
        samples = path.sample(step)
        s = np.asarray([q[0] for q in samples])
        x = np.asarray([q[1][0] for q in samples])
        y = np.asarray([q[1][1] for q in samples])
        theta = np.asarray([q[2] for q in samples])
        return cls(s, x, y, theta, kappa)

    def to_records(self) -> list[dict]:
        return [
            {"s": float(si), "x": float(xi), "y": float(yi), "theta": float(norm_angle(ti))}
            for si, xi, yi, ti in zip(self.s, self.x, self.y, self.theta)
        ]

    def scaled(self) -> "SampledPath":
        if self.kappa == 1.0:
            return self
        k = self.kappa
        return SampledPath(self.s * k, self.x * k, self.y * k, self.theta.copy(), 1.0)

    @property
    def total_length(self) -> float:
        return float(self.s[-1] - self.s[0]) if len(self.s) else 0.0

    def pose(self, i: int) -> Pose:
        return Pose(float(self.x[i]), float(self.y[i]), float(self.theta[i]))

    def turning_class(self) -> int:
        """Class index from the turning integral of the sampled headings."""
        total = float(self.theta[-1] - self.theta[0])
        delta = norm_angle(total)
        return round((total - delta) / TWO_PI)

    def validate(self) -> None:
        """Check the sampling invariants in the curvature-scaled frame."""
        sp = self.scaled()
        if len(sp.s) < 2:
            return
        if abs(float(sp.s[0])) > 1e-9:
            raise ValueError("arc length must start at 0")
        gaps = np.diff(sp.s)
        if np.any(gaps <= 0.0):
            raise ValueError("arc lengths must be strictly increasing")
        step = float(gaps.max())
        if step > MAX_SPACING + 1e-9:
            raise ValueError(f"sample spacing {step:.4f} exceeds {MAX_SPACING}")
        if len(sp.s) >= 3:
            curv = (sp.theta[2:] - sp.theta[:-2]) / (sp.s[2:] - sp.s[:-2])
            worst = float(np.abs(curv).max())
            if worst > 1.0 + 10.0 * step:
                raise CurvatureViolation(
                    f"estimated curvature {worst:.4f} exceeds bound 1 + 10*{step:.4f}"
                )


@dataclass(frozen=True)
class Fragmentation:
    """Break indices into the sample array; every fragment is shorter than 1."""

    break_indices: tuple[int, ...]

    @property
    def fragment_count(self) -> int:
        return len(self.break_indices) - 1


def fragment(path: SampledPath) -> Fragmentation:
    """Deterministic near-equal split into ceil(length / 0.9) fragments."""
    path.validate()
    sp = path.scaled()
    total = sp.total_length
    if total <= EPS or len(sp.s) < 2:
        return Fragmentation((0, len(sp.s) - 1) if len(sp.s) > 1 else (0,))
    m = max(1, math.ceil(total / FRAGMENT_TARGET))
    targets = [sp.s[0] + total * i / m for i in range(m + 1)]
    idx = [0]
    for t in targets[1:-1]:
        j = int(np.searchsorted(sp.s, t))
        if j > 0 and (j >= len(sp.s) or abs(sp.s[j - 1] - t) <= abs(sp.s[j] - t)):
            j -= 1
        idx.append(max(j, idx[-1] + 1))
    idx.append(len(sp.s) - 1)
    idx = [i for k, i in enumerate(idx) if k == 0 or i > idx[k - 1]]
    frag = Fragmentation(tuple(idx))
    for a, b in zip(frag.break_indices, frag.break_indices[1:]):
        if sp.s[b] - sp.s[a] >= 1.0:
            raise ValueError("fragment of length >= 1; sampling too coarse")
    return frag


def replace_fragment(start_pose: Pose, end_pose: Pose) -> CsPath:
    """Shortest CSC path with both arc sweeps below pi between the poses."""
    best = None
    for t in _CSC_TYPES:
        for cand in solve_base(ProblemInstance(start_pose, end_pose), t):
            first, _, last = cand.path.segments
            if first.sweep < math.pi and last.sweep < math.pi:
                if best is None or cand.length < best.length:
                    best = cand
    if best is None:
        raise NoReplacement(
            f"no CSC path with sweeps < pi joins {start_pose} and {end_pose}"
        )
    return best.path


RESAMPLE_STEP = 0.04
_SETTLE = 2.5e-7


def _normalise_once(sp: SampledPath) -> CsPath:
    frag = fragment(sp)
    if frag.fragment_count < 1:
        return CsPath(sp.pose(0) if len(sp.s) else Pose(0.0, 0.0, 0.0), ())
    segments: list[Segment] = []
    for a, b in zip(frag.break_indices, frag.break_indices[1:]):
        rep = replace_fragment(sp.pose(a), sp.pose(b))
        segments.extend(rep.segments)
    out = CsPath(sp.pose(0), tuple(segments))
    assert class_of(out) == sp.turning_class(), "normalisation changed the class index"
    return out


def normalise(path: SampledPath, max_passes: int = 12) -> CsPath:
    """Replace every fragment; the result is a cs path of no greater length
    with the same endpoints and class index as the input.

    Replacement repeats on the resampled output until the length settles,
    so normalising the result again changes it by no more than ~1e-6.
    """
    out = _normalise_once(path.scaled())
    for _ in range(max_passes - 1):
        if out.length <= EPS:
            break
        nxt = _normalise_once(SampledPath.from_cs_path(out, step=RESAMPLE_STEP))
        if nxt.length < out.length:
            gain = out.length - nxt.length
            out = nxt
            if gain <= _SETTLE:
                break
        else:
            break
    return out
