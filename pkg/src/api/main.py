"""
FastAPI backend for chebroot
"""
from typing import List, Optional, Tuple

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field
import logging
import uvicorn

from ..config import API_HOST, API_PORT, API_TITLE, API_VERSION
from ..classifier.classifier import classify, classify_parameters, sweep_grid
from ..classifier.quartic import classify_general_quartic
from ..classifier.report import ClassificationReport, SweepRow
from ..exceptions import InvalidInput, MethodNotApplicable, ZeroPolynomial
from ..polynomial.oracle import OracleReport, analyze
from ..polynomial.poly_core import MonicQuintic, Poly, depress, require_finite
from ..trig.reduction import reduce

logger = logging.getLogger(__name__)

app = FastAPI(
    title=API_TITLE,
    version=API_VERSION,
    description="Real-root classification of quintics and quartics by trigonometric reduction"
)

# CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Request models
class QuinticRequest(BaseModel):
    coefficients: List[float] = Field(..., min_length=6, max_length=6,
                                      description="a5..a0, descending degree")
    eps_tangent: Optional[float] = None
    u_min: Optional[float] = None


class QuarticRequest(BaseModel):
    coefficients: List[float] = Field(..., min_length=5, max_length=5,
                                      description="a4..a0, descending degree")
    eps_tangent: Optional[float] = None
    u_min: Optional[float] = None


class OracleRequest(BaseModel):
    coefficients: List[float] = Field(..., min_length=1, max_length=6,
                                      description="descending degree, 1 to 6 values")


class ReductionResponse(BaseModel):
    shift: float
    m: float
    u: float
    alpha: float
    beta: float
    gamma: float
    f0: float
    fpi: float


class SweepRequest(BaseModel):
    alpha: Tuple[float, float, int]
    beta: Tuple[float, float, int]
    gamma: Tuple[float, float, int]
    eps_tangent: Optional[float] = None


# Grids beyond this many points belong to the CLI, which can use worker processes
MAX_SWEEP_POINTS = 100_000


@app.get("/")
async def root():
    """Root endpoint"""
    return {
        "message": "chebroot classification API",
        "version": API_VERSION,
        "status": "operational"
    }


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {"status": "healthy", "classifier": "ready"}


@app.post("/classify", response_model=ClassificationReport)
def classify_quintic(request: QuinticRequest):
    """
    Classify a5 z^5 + ... + a0 into 1, 3 or 5 distinct real roots.

    Degenerate inputs and m >= 0 are answered through the Sturm oracle and
    reported with method OracleFallback.
    """
    try:
        q = MonicQuintic.from_coefficients(request.coefficients)
        return classify(q, eps_tangent=request.eps_tangent, u_min=request.u_min)
    except InvalidInput as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/quartic", response_model=ClassificationReport)
def classify_quartic_endpoint(request: QuarticRequest):
    """Classify a4 z^4 + ... + a0 into 0, 2 or 4 distinct real roots"""
    try:
        return classify_general_quartic(request.coefficients, eps_tangent=request.eps_tangent,
                                        u_min=request.u_min)
    except InvalidInput as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/oracle", response_model=OracleReport)
def oracle(request: OracleRequest):
    """Sturm-oracle distinct real-root count and refined roots"""
    try:
        require_finite(request.coefficients)
    except InvalidInput as e:
        raise HTTPException(status_code=400, detail=str(e))
    P = Poly.from_descending(request.coefficients)
    if P.degree == 0:
        detail = "zero polynomial" if P.is_zero() else "constant polynomial has no roots"
        raise HTTPException(status_code=400, detail=detail)
    try:
        return analyze(P)
    except ZeroPolynomial as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/reduce", response_model=ReductionResponse)
def reduce_quintic(request: QuinticRequest):
    """
    Trigonometric parameters of a quintic.

    Responds 422 when m >= 0, where the substitution does not exist.
    """
    try:
        dq = depress(MonicQuintic.from_coefficients(request.coefficients))
    except InvalidInput as e:
        raise HTTPException(status_code=400, detail=str(e))
    r = reduce(dq)
    f0, fpi = r.boundary_values()
    return ReductionResponse(shift=dq.shift, m=dq.m, u=r.u, alpha=r.alpha, beta=r.beta,
                             gamma=r.gamma, f0=f0, fpi=fpi)


@app.post("/sweep", response_model=List[SweepRow])
def sweep(request: SweepRequest):
    """Interior zero counts over an (alpha, beta, gamma) grid, in grid order"""
    for name, (_, _, steps) in (("alpha", request.alpha), ("beta", request.beta),
                                ("gamma", request.gamma)):
        if steps < 1:
            raise HTTPException(status_code=400, detail=f"{name} steps must be >= 1")
    try:
        require_finite([*request.alpha[:2], *request.beta[:2], *request.gamma[:2]])
    except InvalidInput as e:
        raise HTTPException(status_code=400, detail=str(e))
    total = request.alpha[2] * request.beta[2] * request.gamma[2]
    if total > MAX_SWEEP_POINTS:
        raise HTTPException(status_code=400,
                            detail=f"grid of {total} points exceeds {MAX_SWEEP_POINTS}")
    return [
        classify_parameters(a, b, g, eps_tangent=request.eps_tangent)
        for a, b, g in sweep_grid(request.alpha, request.beta, request.gamma)
    ]


@app.exception_handler(MethodNotApplicable)
async def method_not_applicable_handler(request, exc: MethodNotApplicable):
    return JSONResponse(status_code=422, content={"detail": exc.reason, "m": exc.m})


if __name__ == "__main__":
    uvicorn.run(app, host=API_HOST, port=API_PORT)
