"""HTTP front end.

Run locally with::

    uvicorn blaschke_gamma.service.app:app

Every analysis route is a POST taking JSON function specs and returning
a schema-versioned report; spec parse errors map to 422 with the JSON
path of the offending node, domain and exactness errors to 400.
Inconclusive or degenerate analyses are successful responses with the
corresponding ``status`` field.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import (BlaschkeGammaError, DomainError, NotRational,
                      SpecParseError)
from . import handlers
from .models import (SCHEMA_VERSION, ClassifyRequest, DecomposeRequest,
                     ErrorBody, ErrorEnvelope, FiberRequest, GammaRequest,
                     HealthResponse, MonomialRequest, Report,
                     StructureRequest, ZerosRequest)

app = FastAPI(
    title="blaschke-gamma",
    version=__version__,
    description=("Discriminant-quotient analysis of two-generator function "
                 "algebras on the unit disk"))


def _error_response(status_code: int, exc: BlaschkeGammaError,
                    path: str | None = None) -> JSONResponse:
    envelope = ErrorEnvelope(error=ErrorBody(
        kind=type(exc).__name__, message=str(exc), path=path))
    return JSONResponse(status_code=status_code,
                        content=envelope.model_dump(exclude_none=True))


@app.exception_handler(SpecParseError)
async def _on_parse_error(request: Request, exc: SpecParseError):
    return _error_response(422, exc, exc.path)


@app.exception_handler(NotRational)
async def _on_not_rational(request: Request, exc: NotRational):
    return _error_response(400, exc)


@app.exception_handler(DomainError)
async def _on_domain_error(request: Request, exc: DomainError):
    return _error_response(400, exc)


@app.exception_handler(BlaschkeGammaError)
async def _on_library_error(request: Request, exc: BlaschkeGammaError):
    return _error_response(400, exc)


@app.get("/v1/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__,
                          schema_version=SCHEMA_VERSION)


@app.post("/v1/fiber", response_model=Report,
          response_model_exclude_none=True)
def fiber_route(req: FiberRequest) -> Report:
    return handlers.run_fiber(req.generator, complex(*req.z))


@app.post("/v1/gamma", response_model=Report,
          response_model_exclude_none=True)
def gamma_route(req: GammaRequest) -> Report:
    z = complex(*req.z) if req.z is not None else None
    grid = (req.grid.points, req.grid.radius) if req.grid else None
    return handlers.run_gamma(req.generator, req.g, z=z, grid=grid,
                              exact=req.exact)


@app.post("/v1/zeros", response_model=Report,
          response_model_exclude_none=True)
def zeros_route(req: ZerosRequest) -> Report:
    return handlers.run_zeros(req.generator, req.g, radius=req.radius,
                              max_zeros=req.max_zeros)


@app.post("/v1/classify", response_model=Report,
          response_model_exclude_none=True)
def classify_route(req: ClassifyRequest) -> Report:
    return handlers.run_classify(
        req.generator, req.g, space=req.space, tol=req.tol,
        defect_threshold=req.defect_threshold, max_zeros=req.max_zeros,
        radii=req.radii, points=req.points)


@app.post("/v1/decompose", response_model=Report,
          response_model_exclude_none=True)
def decompose_route(req: DecomposeRequest) -> Report:
    return handlers.run_decompose(
        req.generator, req.g, req.f, points=req.points, radius=req.radius,
        include_samples=req.include_samples)


@app.post("/v1/structure", response_model=Report,
          response_model_exclude_none=True)
def structure_route(req: StructureRequest) -> Report:
    return handlers.run_structure(req.generator, req.g)


@app.post("/v1/monomial", response_model=Report,
          response_model_exclude_none=True)
def monomial_route(req: MonomialRequest) -> Report:
    return handlers.run_monomial(req.n, req.m)
