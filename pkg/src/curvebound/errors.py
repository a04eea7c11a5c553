"""Exception types shared across the package."""

from .geometry import ContinuityViolation

__all__ = [
    "ContinuityViolation",
    "CurvatureViolation",
    "PreconditionViolation",
    "NoReplacement",
    "NoSelfIntersection",
    "BudgetExhausted",
]


class CurvatureViolation(Exception):
    """A sampled path's estimated curvature exceeds the declared bound."""


class PreconditionViolation(Exception):
    """An operation was called outside its stated precondition."""


class NoReplacement(Exception):
    """No CSC path with arc sweeps below pi joins the fragment endpoints."""


class NoSelfIntersection(Exception):
    """The path has no transversal self-intersection."""


class BudgetExhausted(Exception):
    """The search budget ran out before a witness met the endpoint tolerance.

    Carries the best attempt found so far in ``best``.
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best
