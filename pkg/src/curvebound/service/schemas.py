"""Pydantic request/response models for the solver service.

The CLI builds the same models and either calls the handlers in process or
posts them to a running server, so the wire format is defined once, here.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..geometry import Pose, ProblemInstance


class PoseModel(BaseModel):
    x: float
    y: float
    theta: float

    def to_pose(self) -> Pose:
        return Pose(self.x, self.y, self.theta)

    @classmethod
    def from_pose(cls, p: Pose) -> "PoseModel":
        return cls(x=p.x, y=p.y, theta=p.theta)


class InstanceMixin(BaseModel):
    start: PoseModel
    end: PoseModel
    kappa: float = Field(default=1.0, gt=0.0)

    def to_instance(self) -> ProblemInstance:
        return ProblemInstance(self.start.to_pose(), self.end.to_pose(), self.kappa)


class SegmentModel(BaseModel):
    type: Literal["L", "R", "S"]
    sweep: Optional[float] = None
    length: Optional[float] = None
    center: Optional[tuple[float, float]] = None
    from_: Optional[tuple[float, float]] = Field(default=None, alias="from")
    to: Optional[tuple[float, float]] = None

    model_config = {"populate_by_name": True}


class ProximityModel(BaseModel):
    condition: Literal["I", "II", "III", "IV"]
    label: Literal["A", "B", "C", "D"]
    heuristic: bool
    d_ll: float
    d_rr: float


class SolveRequest(InstanceMixin):
    n: int
    include_svg: bool = False
    proximity_seed: int = 0


class SolveResult(BaseModel):
    n: int
    length: float
    family: str
    chi: int
    crossings: int
    segments: list[SegmentModel]
    proximity: ProximityModel


class SolveResponse(SolveResult):
    svg: Optional[str] = None


class ProfileRequest(InstanceMixin):
    n_min: int
    n_max: int
    include_svg: bool = False
    proximity_seed: int = 0

    @model_validator(mode="after")
    def _check_range(self) -> "ProfileRequest":
        if self.n_min > self.n_max:
            raise ValueError("n_min must not exceed n_max")
        if self.n_max - self.n_min + 1 > 64:
            raise ValueError("class range is limited to 64 values")
        return self


class ProfileResponse(BaseModel):
    rows: list[SolveResult]
    svg: Optional[str] = None


class ClassifyRequest(InstanceMixin):
    seed: int = 0


class SampleRecord(BaseModel):
    s: float
    x: float
    y: float
    theta: float


class MoveModel(BaseModel):
    kind: Literal["L", "R", "S"]
    sweep: Optional[float] = None
    length: Optional[float] = None

    @model_validator(mode="after")
    def _check_amount(self) -> "MoveModel":
        if self.kind == "S":
            if self.length is None:
                raise ValueError("S moves need a length")
        elif self.sweep is None:
            raise ValueError("arc moves need a sweep")
        return self


class CsPathModel(BaseModel):
    start: PoseModel
    segments: list[MoveModel]


class NormaliseRequest(BaseModel):
    samples: list[SampleRecord]
    kappa: float = Field(default=1.0, gt=0.0)


class NormaliseResponse(BaseModel):
    length_in: float
    length_out: float
    class_index: int
    complexity: int
    path: CsPathModel


class VerifyRequest(BaseModel):
    seed: int = 42
    trials: int = Field(default=10, ge=1, le=500)
    n_min: int = -2
    n_max: int = 2
    restarts: int = Field(default=64, ge=2)
    max_pieces: int = Field(default=7, ge=3, le=7)


class VerifyRow(BaseModel):
    trial: int
    n: int
    enumerated: float
    oracle: float
    gap: float
    agree: bool


class VerifyResponse(BaseModel):
    trials: int
    comparisons: int
    hard_failures: int
    agreement_fraction: float
    max_gap: float
    rows: list[VerifyRow]
