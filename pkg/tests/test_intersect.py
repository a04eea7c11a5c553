import math

import pytest

from curvebound.errors import NoSelfIntersection
from curvebound.geometry import TWO_PI, Pose, insert_loop, path_from_moves
from curvebound.intersect import (
    count_transversal_crossings,
    find_self_intersections,
    first_self_intersection,
    is_embedded,
)


def teardrop():
    # Straight out, three-quarter turn, straight back across the entry leg.
    return path_from_moves(Pose(0, 0, 0), [("S", 2.0), ("L", 1.5 * math.pi), ("S", 2.0)])


def test_simple_paths_are_embedded():
    assert is_embedded(path_from_moves(Pose(0, 0, 0), [("S", 5.0)]))
    assert is_embedded(path_from_moves(Pose(0, 0, 0), [("L", math.pi), ("S", 1.0)]))
    assert is_embedded(path_from_moves(Pose(0, 0, 0), [("L", TWO_PI)]))


def test_teardrop_has_one_crossing():
    path = teardrop()
    events = find_self_intersections(path)
    assert len(events) == 1
    ev = events[0]
    assert ev.point == pytest.approx((1.0, 0.0), abs=1e-9)
    assert ev.s1 == pytest.approx(1.0, abs=1e-9)
    assert ev.s2 == pytest.approx(2.0 + 1.5 * math.pi + 1.0, abs=1e-9)


def test_tangential_touch_not_counted():
    # A full circle inserted at the start touches the straight leg tangentially.
    path = insert_loop(path_from_moves(Pose(0, 0, 0), [("S", 5.0)]), 0, "L")
    assert count_transversal_crossings(path) == 0


def test_full_loop_then_crossing_counts_once_per_pass():
    # Two stacked teardrop crossings: the arc sweeps past the entry leg twice.
    path = path_from_moves(Pose(0, 0, 0), [("S", 2.0), ("L", 1.5 * math.pi + TWO_PI), ("S", 2.0)])
    events = find_self_intersections(path)
    # the doubly-traversed circle overlaps itself tangentially; the exit leg
    # still crosses the entry leg once, and the circle pair points repeat.
    assert any(abs(e.point[0] - 1.0) < 1e-6 and abs(e.point[1]) < 1e-6 for e in events)
    assert count_transversal_crossings(path) >= 1


def test_first_self_intersection_orders_by_second_parameter():
    path = teardrop()
    ev = first_self_intersection(path)
    assert ev.s2 == pytest.approx(3.0 + 1.5 * math.pi, abs=1e-9)


def test_no_self_intersection_raises():
    with pytest.raises(NoSelfIntersection):
        first_self_intersection(path_from_moves(Pose(0, 0, 0), [("S", 1.0)]))


def test_closed_path_closure_not_a_crossing():
    square = path_from_moves(
        Pose(0, 0, 0),
        [("S", 2.0), ("L", math.pi / 2), ("S", 2.0), ("L", math.pi / 2),
         ("S", 2.0), ("L", math.pi / 2), ("S", 2.0), ("L", math.pi / 2)],
    )
    end = square.endpoint()
    assert abs(end.x) < 1e-9 and abs(end.y) < 1e-9
    assert count_transversal_crossings(square) == 0


def test_opposite_loops_cross_twice():
    # Two opposite three-quarter turns joined by straights: net turning zero,
    # with each exit leg crossing an earlier leg transversally.
    path = path_from_moves(
        Pose(0, 0, 0),
        [("S", 2.0), ("L", 1.5 * math.pi), ("S", 4.0), ("R", 1.5 * math.pi), ("S", 2.0)],
    )
    assert path.turning == pytest.approx(0.0)
    assert count_transversal_crossings(path) == 2
