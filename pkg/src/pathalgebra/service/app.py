"""FastAPI application exposing the solver operations.

Error mapping: domain errors (undefined closure, non-stabilizing
iteration, singular system) return 422; every input problem, including
request-shape validation failures, returns 400. Both carry a JSON body
{"error": {"category", "type", "message"}} so thin clients can map
them to exit codes without parsing prose.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import PathAlgebraError, error_category
from . import handlers
from .models import (
    ClosureRequest,
    ClosureResponse,
    CountsRequest,
    CountsResponse,
    FactorRequest,
    FactorResponse,
    HealthResponse,
    PathRequest,
    PathResponse,
    SolveRequest,
    SolveResponse,
)


def _error_body(category: str, kind: str, message: str) -> dict:
    return {"error": {"category": category, "type": kind, "message": message}}


def create_app() -> FastAPI:
    app = FastAPI(
        title="pathalgebra",
        version=__version__,
        description="Bellman-equation solvers over exchangeable semirings.",
    )

    @app.exception_handler(PathAlgebraError)
    async def _library_error(request: Request, exc: PathAlgebraError):
        category = error_category(exc)
        status = 422 if category == "domain" else 400
        return JSONResponse(
            status_code=status,
            content=_error_body(category, type(exc).__name__, str(exc)),
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content=_error_body("input", "RequestValidationError", str(exc)),
        )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/v1/solve", response_model=SolveResponse)
    def solve(req: SolveRequest) -> SolveResponse:
        return handlers.handle_solve(req)

    @app.post("/v1/closure", response_model=ClosureResponse)
    def closure(req: ClosureRequest) -> ClosureResponse:
        return handlers.handle_closure(req)

    @app.post("/v1/factor", response_model=FactorResponse)
    def factor(req: FactorRequest) -> FactorResponse:
        return handlers.handle_factor(req)

    @app.post("/v1/path", response_model=PathResponse)
    def path(req: PathRequest) -> PathResponse:
        return handlers.handle_path(req)

    @app.post("/v1/counts", response_model=CountsResponse)
    def counts(req: CountsRequest) -> CountsResponse:
        return handlers.handle_counts(req)

    return app


app = create_app()
