"""Request handlers shared by the FastAPI app and the in-process CLI."""

from __future__ import annotations

import math

import numpy as np

from ..classes import classify_proximity
from ..geometry import Arc, CsPath, Line, Pose, ProblemInstance, norm_angle
from ..minimiser import MinimiserResult, minimise_in_class
from ..normalise import SampledPath, normalise
from ..oracle import OracleBudget, oracle_min_in_class
from ..svgplot import render_svg
from .schemas import (
    ClassifyRequest,
    CsPathModel,
    MoveModel,
    NormaliseRequest,
    NormaliseResponse,
    PoseModel,
    ProfileRequest,
    ProfileResponse,
    ProximityModel,
    SegmentModel,
    SolveRequest,
    SolveResponse,
    SolveResult,
    VerifyRequest,
    VerifyResponse,
    VerifyRow,
)


def _segment_models(path: CsPath) -> list[SegmentModel]:
    out: list[SegmentModel] = []
    for seg in path.segments:
        if isinstance(seg, Arc):
            out.append(SegmentModel(type=seg.orientation, sweep=seg.sweep, center=seg.center))
        else:
            assert isinstance(seg, Line)
            out.append(SegmentModel(type="S", length=seg.length, **{"from": seg.start, "to": seg.end}))
    return out


def _proximity_model(inst: ProblemInstance, seed: int) -> ProximityModel:
    rep = classify_proximity(inst, seed=seed)
    return ProximityModel(
        condition=rep.condition, label=rep.label, heuristic=rep.heuristic,
        d_ll=rep.d_ll, d_rr=rep.d_rr,
    )


def _solve_result(res: MinimiserResult, proximity: ProximityModel) -> SolveResult:
    return SolveResult(
        n=res.class_index,
        length=res.length,
        family=res.winner.family,
        chi=res.chi,
        crossings=res.crossings,
        segments=_segment_models(res.winner.path),
        proximity=proximity,
    )


def handle_solve(req: SolveRequest) -> SolveResponse:
    inst = req.to_instance()
    res = minimise_in_class(inst, req.n)
    prox = _proximity_model(inst, req.proximity_seed)
    svg = render_svg([res.winner.path], inst, labels=[f"n={req.n}"]) if req.include_svg else None
    return SolveResponse(**_solve_result(res, prox).model_dump(by_alias=True), svg=svg)


def handle_profile(req: ProfileRequest) -> ProfileResponse:
    inst = req.to_instance()
    prox = _proximity_model(inst, req.proximity_seed)
    results = [minimise_in_class(inst, n) for n in range(req.n_min, req.n_max + 1)]
    rows = [_solve_result(r, prox) for r in results]
    svg = None
    if req.include_svg:
        svg = render_svg(
            [r.winner.path for r in results], inst,
            labels=[f"n={r.class_index}" for r in results],
        )
    return ProfileResponse(rows=rows, svg=svg)


def handle_classify(req: ClassifyRequest) -> ProximityModel:
    return _proximity_model(req.to_instance(), req.seed)


def handle_normalise(req: NormaliseRequest) -> NormaliseResponse:
    sampled = SampledPath.from_records([r.model_dump() for r in req.samples], kappa=req.kappa)
    out = normalise(sampled)
    moves = []
    for seg in out.segments:
        if isinstance(seg, Arc):
            moves.append(MoveModel(kind=seg.orientation, sweep=seg.sweep))
        else:
            moves.append(MoveModel(kind="S", length=seg.length))
    total_in = sampled.total_length
    total_out = out.length / req.kappa
    delta = norm_angle(out.endpoint().theta - out.start.theta)
    class_index = round((out.turning - delta) / (2 * math.pi))
    return NormaliseResponse(
        length_in=total_in,
        length_out=total_out,
        class_index=class_index,
        complexity=out.complexity,
        path=CsPathModel(start=PoseModel.from_pose(out.start), segments=moves),
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    rng = np.random.default_rng(req.seed)
    budget = OracleBudget(max_pieces=req.max_pieces, restarts=req.restarts, seed=req.seed)
    rows: list[VerifyRow] = []
    hard_failures = 0
    agree = 0
    max_gap = 0.0
    for trial in range(req.trials):
        start = Pose(rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-math.pi, math.pi))
        end = Pose(rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-math.pi, math.pi))
        inst = ProblemInstance(start, end)
        for n in range(req.n_min, req.n_max + 1):
            enum_len = minimise_in_class(inst, n).length
            oracle_len = oracle_min_in_class(inst, n, budget).length
            gap = oracle_len - enum_len
            ok_hard = enum_len <= oracle_len + 1e-3
            ok_agree = abs(gap) <= 1e-3
            hard_failures += 0 if ok_hard else 1
            agree += 1 if ok_agree else 0
            max_gap = max(max_gap, abs(gap))
            rows.append(VerifyRow(
                trial=trial, n=n, enumerated=enum_len, oracle=oracle_len,
                gap=gap, agree=ok_agree,
            ))
    comparisons = len(rows)
    return VerifyResponse(
        trials=req.trials,
        comparisons=comparisons,
        hard_failures=hard_failures,
        agreement_fraction=agree / comparisons if comparisons else 1.0,
        max_gap=max_gap,
        rows=rows,
    )
