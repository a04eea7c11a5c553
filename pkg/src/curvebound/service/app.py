"""FastAPI application exposing the solver over HTTP."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..errors import CurvatureViolation
from . import handlers
from .schemas import (
    ClassifyRequest,
    NormaliseRequest,
    NormaliseResponse,
    ProfileRequest,
    ProfileResponse,
    ProximityModel,
    SolveRequest,
    SolveResponse,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="curvebound",
        description="Length-minimising bounded-curvature paths per homotopy class",
        version="0.1.0",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/solve", response_model=SolveResponse)
    def solve(req: SolveRequest) -> SolveResponse:
        return handlers.handle_solve(req)

    @app.post("/profile", response_model=ProfileResponse)
    def profile(req: ProfileRequest) -> ProfileResponse:
        return handlers.handle_profile(req)

    @app.post("/classify", response_model=ProximityModel)
    def classify(req: ClassifyRequest) -> ProximityModel:
        return handlers.handle_classify(req)

    @app.post("/normalise", response_model=NormaliseResponse)
    def normalise(req: NormaliseRequest) -> NormaliseResponse:
        try:
            return handlers.handle_normalise(req)
        except CurvatureViolation as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        return handlers.handle_verify(req)

    return app


app = create_app()
