"""Per-class length minimisation by enumerating looped candidate families.

Every realizable base candidate spawns one candidate per requested class:
the class gap k is paid with |k| full loops (L when k > 0, R when k < 0)
placed on an adjacent circle, merged into a same-orientation arc whenever
one exists. Loop circles pass through a pose of the path, so C1 continuity
is automatic and each loop costs exactly 2*pi.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .classes import class_of
from .dubins import BaseCandidate, all_base_candidates
from .geometry import TWO_PI, Arc, CsPath, ProblemInstance, arc_from_pose
from .intersect import count_transversal_crossings


@dataclass(frozen=True)
class LoopedCandidate:
    """A base candidate plus k signed loops. Lengths in scaled units."""

    base: BaseCandidate
    loop_count: int  # k > 0: k counterclockwise loops; k < 0: |k| clockwise
    placement: str  # "none" | "start" | "end" | "middle"
    family: str
    path: CsPath
    length: float

    @property
    def chi(self) -> int:
        return abs(self.loop_count)


@dataclass(frozen=True)
class MinimiserResult:
    class_index: int
    winner: LoopedCandidate
    length: float  # original (unscaled) units
    chi: int
    crossings: int
    runner_ups: tuple[LoopedCandidate, ...]


def _grow_arc(arc: Arc, extra: float) -> Arc:
    return Arc(arc.center, arc.orientation, arc.start_angle, arc.sweep + extra)


def _with_loops(base: BaseCandidate, k: int) -> LoopedCandidate:
    if k == 0:
        family = "CCC" if base.base_type.is_ccc() else "CSC"
        return LoopedCandidate(base, 0, "none", family, base.path, base.length)

    orient = "L" if k > 0 else "R"
    extra = TWO_PI * abs(k)
    segs = base.path.segments
    first = segs[0]
    assert isinstance(first, Arc)

    if base.base_type.is_ccc():
        middle = segs[1]
        assert isinstance(middle, Arc)
        if orient == first.orientation:
            new_segs = (_grow_arc(first, extra),) + segs[1:]
            placement, family = "start", "C^χ C C"
        else:
            new_segs = (first, _grow_arc(middle, extra)) + segs[2:]
            placement, family = "middle", "C C^χ C"
    else:
        last = segs[-1]
        assert isinstance(last, Arc)
        if orient == first.orientation:
            new_segs = (_grow_arc(first, extra),) + segs[1:]
            placement, family = "start", "C^χ S C"
        elif base.base_type.is_skew():
            new_segs = segs[:-1] + (_grow_arc(last, extra),)
            placement, family = "end", "C S C^χ"
        else:
            loop = arc_from_pose(base.path.start, orient, extra)
            new_segs = (loop,) + segs
            placement, family = "start", "C^χ C S C"

    path = CsPath(base.path.start, new_segs)
    return LoopedCandidate(base, k, placement, family, path, path.length)


def enumerate_candidates(inst: ProblemInstance, n: int) -> list[LoopedCandidate]:
    """One candidate per realizable base, looped into class n."""
    out = []
    for base in all_base_candidates(inst):
        k = n - class_of(base.path)
        out.append(_with_loops(base, k))
    return out


def _sort_key(c: LoopedCandidate):
    return (c.length, abs(c.loop_count), c.base.type_order, c.base.variant)


def minimise_in_class(inst: ProblemInstance, n: int) -> MinimiserResult:
    """The length minimiser of the class-n component."""
    candidates = sorted(enumerate_candidates(inst, n), key=_sort_key)
    assert candidates, "LSL and RSR guarantee at least one candidate"
    winner = candidates[0]
    assert class_of(winner.path) == n
    return MinimiserResult(
        class_index=n,
        winner=winner,
        length=winner.length / inst.kappa,
        chi=winner.chi,
        crossings=count_transversal_crossings(winner.path),
        runner_ups=tuple(candidates[1:]),
    )


def class_length_profile(inst: ProblemInstance, n_range: Iterable[int]) -> list[tuple[int, float]]:
    """(n, minimal length) rows over a finite range of class indices."""
    return [(n, minimise_in_class(inst, n).length) for n in n_range]
