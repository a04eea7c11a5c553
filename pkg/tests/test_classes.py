import math
import random

import pytest

from curvebound.classes import (
    class_of,
    classify_proximity,
    has_embedded_class,
    turning_data,
)
from curvebound.errors import PreconditionViolation
from curvebound.geometry import (
    TWO_PI,
    Pose,
    ProblemInstance,
    concat,
    insert_loop,
    path_from_moves,
    reflect,
)


def test_turning_data_examples():
    straight = path_from_moves(Pose(0, 0, 0), [("S", 5.0)])
    td = turning_data(straight)
    assert (td.total_turning, td.principal_delta, td.class_index) == (0.0, 0.0, 0)

    looped = path_from_moves(Pose(0, 0, 0), [("L", TWO_PI), ("S", 5.0)])
    td = turning_data(looped)
    assert td.total_turning == pytest.approx(TWO_PI)
    assert td.principal_delta == pytest.approx(0.0)
    assert td.class_index == 1

    half = path_from_moves(Pose(0, 0, 0), [("L", math.pi)])
    td = turning_data(half)
    assert td.total_turning == pytest.approx(math.pi)
    assert td.principal_delta == pytest.approx(math.pi)
    assert td.class_index == 0


def test_turning_identity():
    rng = random.Random(3)
    for _ in range(50):
        moves = [
            (rng.choice(["L", "R", "S"]), rng.uniform(0.0, 4.0)) for _ in range(5)
        ]
        path = path_from_moves(Pose(0, 0, 0.4), moves)
        td = turning_data(path)
        assert td.total_turning == pytest.approx(
            td.principal_delta + TWO_PI * td.class_index, abs=1e-9
        )


def test_class_of_projection():
    assert class_of(path_from_moves(Pose(0, 0, 0), [("S", 5.0)])) == 0
    assert class_of(path_from_moves(Pose(0, 0, 0), [("L", TWO_PI), ("S", 5.0)])) == 1
    assert class_of(path_from_moves(Pose(0, 0, 0), [("L", math.pi)])) == 0


def test_loop_insertion_shifts_class(rng):
    for _ in range(25):
        moves = [("L", rng.uniform(0, 3)), ("S", rng.uniform(0, 3)), ("R", rng.uniform(0, 3))]
        path = path_from_moves(Pose(0, 0, 0.2), moves)
        n = class_of(path)
        for j in range(len(path.segments) + 1):
            assert class_of(insert_loop(path, j, "L")) == n + 1
            assert class_of(insert_loop(path, j, "R")) == n - 1


def test_reflection_negates_class():
    path = path_from_moves(Pose(0, 0, 0), [("L", TWO_PI), ("S", 2.0), ("L", 1.0)])
    assert class_of(reflect(path)) == -class_of(path)


def test_concat_adds_turning():
    a = path_from_moves(Pose(0, 0, 0), [("L", 2.0), ("S", 1.0)])
    b = path_from_moves(a.endpoint(), [("R", 0.7), ("L", TWO_PI)])
    joined = concat(a, b)
    assert joined.turning == pytest.approx(a.turning + b.turning, abs=1e-12)


@pytest.mark.parametrize(
    "end, condition, labels",
    [
        (Pose(5, 0, 0), "I", {"A"}),
        (Pose(2, 2, math.pi / 2), "II", {"B"}),
        (Pose(2, -2, -math.pi / 2), "III", {"B"}),
        (Pose(0.5, 0.2, 0), "IV", {"C", "D"}),
        (Pose(1, 3.8, 0), "IV", {"C", "D"}),
    ],
)
def test_classify_proximity_conditions(end, condition, labels):
    report = classify_proximity(ProblemInstance(Pose(0, 0, 0), end))
    assert report.condition == condition
    assert report.label in labels
    assert report.heuristic == (condition == "IV")


def test_classify_distances_match_geometry():
    report = classify_proximity(ProblemInstance(Pose(0, 0, 0), Pose(5, 0, 0)))
    assert report.d_ll == pytest.approx(5.0)
    assert report.d_rr == pytest.approx(5.0)
    report = classify_proximity(ProblemInstance(Pose(0, 0, 0), Pose(0.5, 0.2, 0)))
    assert report.d_ll == pytest.approx(math.hypot(0.5, 0.2))
    report = classify_proximity(ProblemInstance(Pose(0, 0, 0), Pose(1, 3.8, 0)))
    assert report.d_ll == pytest.approx(math.sqrt(1 + 3.8**2))


def test_classify_rigid_motion_invariance(rng):
    cases = [
        ProblemInstance(Pose(0, 0, 0), Pose(5, 0, 0)),
        ProblemInstance(Pose(0, 0, 0), Pose(2, 2, math.pi / 2)),
        ProblemInstance(Pose(0, 0, 0), Pose(0.5, 0.2, 0)),
    ]
    for inst in cases:
        base = classify_proximity(inst)
        for _ in range(5):
            moved = inst.moved(rng.uniform(-math.pi, math.pi), (rng.uniform(-9, 9), rng.uniform(-9, 9)))
            got = classify_proximity(moved)
            assert (got.condition, got.label) == (base.condition, base.label)


def test_embedded_class_precondition():
    with pytest.raises(PreconditionViolation):
        has_embedded_class(ProblemInstance(Pose(0, 0, 0), Pose(5, 0, 0)))


def test_embedded_class_identity_instance_is_free():
    # Apart from the empty path, every class at coincident endpoints
    # contains loops, so no embedded class is reported.
    assert has_embedded_class(ProblemInstance(Pose(0, 0, 0), Pose(0, 0, 0))) is False


def test_embedded_class_desk_scale_recorded():
    value = has_embedded_class(ProblemInstance(Pose(0, 0, 0), Pose(0.5, 0.2, 0)))
    assert value in (True, False)
    report = classify_proximity(ProblemInstance(Pose(0, 0, 0), Pose(0.5, 0.2, 0)))
    assert report.label == ("D" if value else "C")
