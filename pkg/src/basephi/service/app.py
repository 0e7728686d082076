"""FastAPI app exposing expansion, enumeration, counting and verification.

Run locally with `uvicorn basephi.service.app:app`. Domain and guard errors
from the core library map to HTTP 400 with the error message as detail.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..bergman import bergman_greedy, bergman_recursive, classify_lucas_interval
from ..counting import tot_fib, tot_kappa, tot_nu
from ..enumeration import enumerate_knott, enumerate_natural
from ..errors import DomainError, GuardBoundError
from ..verify import run_all, run_suite
from ..words import DigitWord, block_factorization
from .schemas import (
    ClassifyRequest,
    ClassifyResponse,
    CountRequest,
    CountResponse,
    EnumerateRequest,
    EnumerateResponse,
    ExpandRequest,
    ExpandResponse,
    ExpansionModel,
    FailureModel,
    HealthResponse,
    SequenceRequest,
    SequenceResponse,
    SubintervalModel,
    SuiteReportModel,
    VerifyRequest,
    VerifyResponse,
)

_COUNTERS = {"kappa": tot_kappa, "nu": tot_nu, "fib": tot_fib}

app = FastAPI(
    title="basephi",
    version=__version__,
    description="Exact base-phi numeration: Bergman expansions, enumeration "
    "and counting of golden-mean representations.",
)


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(GuardBoundError)
async def _guard_error(request: Request, exc: GuardBoundError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _expansion_model(word: DigitWord) -> ExpansionModel:
    return ExpansionModel(word=str(word), L=word.L, R=word.R)


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/expand", response_model=ExpandResponse)
def expand(req: ExpandRequest) -> ExpandResponse:
    if req.method == "both":
        word = bergman_greedy(req.n)
        if word != bergman_recursive(req.n):
            raise HTTPException(
                status_code=500, detail=f"constructors disagree for {req.n}"
            )
    elif req.method == "recursive":
        word = bergman_recursive(req.n)
    else:
        word = bergman_greedy(req.n)
    return ExpandResponse(n=req.n, method=req.method, word=str(word), L=word.L, R=word.R)


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_(req: EnumerateRequest) -> EnumerateResponse:
    expand_set = (enumerate_knott if req.mode == "knott" else enumerate_natural)(req.n)
    return EnumerateResponse(
        n=req.n,
        mode=req.mode,
        expansions=[_expansion_model(w) for w in expand_set],
    )


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest) -> CountResponse:
    return CountResponse(n=req.n, what=req.what, value=_COUNTERS[req.what](req.n))


@app.post("/sequence", response_model=SequenceResponse)
def sequence(req: SequenceRequest) -> SequenceResponse:
    if req.stop < req.start:
        raise DomainError(f"empty range: from {req.start} exceeds to {req.stop}")
    counter = _COUNTERS[req.what]
    values = [counter(n) for n in range(req.start, req.stop + 1)]
    return SequenceResponse(what=req.what, start=req.start, stop=req.stop, values=values)


@app.post("/classify", response_model=ClassifyResponse)
def classify(req: ClassifyRequest) -> ClassifyResponse:
    info = classify_lucas_interval(req.n)
    beta = bergman_greedy(req.n)
    s1 = block_factorization(beta).gaps[-1]
    sub = None
    if info.subinterval is not None:
        sub = SubintervalModel(kind=info.subinterval.kind, bounds=info.subinterval.bounds)
    return ClassifyResponse(
        n=req.n,
        index=info.index,
        parity=info.parity,
        bounds=info.bounds,
        subinterval=sub,
        L=beta.L,
        R=beta.R,
        s1=s1,
        s1_parity="even" if s1 % 2 == 0 else "odd",
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    reports = run_all(req.bound) if req.suite == "all" else [run_suite(req.suite, req.bound)]
    suites = [
        SuiteReportModel(
            suite=r.suite,
            bound=r.bound,
            checks=r.checks,
            failures=[
                FailureModel(input=f.input, expected=f.expected, actual=f.actual)
                for f in r.failures
            ],
            elapsed_ms=round(r.elapsed_ms, 3),
            passed=r.passed,
        )
        for r in reports
    ]
    return VerifyResponse(suites=suites, passed=all(r.passed for r in reports))
