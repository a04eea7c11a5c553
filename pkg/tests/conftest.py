import math
import random

import pytest

from curvebound.geometry import Pose, ProblemInstance


def random_instance(rng: random.Random, box: float = 10.0) -> ProblemInstance:
    def pose() -> Pose:
        return Pose(
            rng.uniform(-box, box),
            rng.uniform(-box, box),
            rng.uniform(-math.pi, math.pi),
        )

    return ProblemInstance(pose(), pose())


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
