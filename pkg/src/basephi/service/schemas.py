"""Request and response models for the HTTP service.

Field names mirror the CLI's JSON output: expansions serialize as
{"word", "L", "R"} and sequence ranges use "from"/"to" keys.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class ExpansionModel(BaseModel):
    word: str
    L: int
    R: int


class ExpandRequest(BaseModel):
    n: int = Field(ge=0)
    method: Literal["greedy", "recursive", "both"] = "greedy"


class ExpandResponse(BaseModel):
    n: int
    method: str
    word: str
    L: int
    R: int


class EnumerateRequest(BaseModel):
    n: int = Field(ge=1)
    mode: Literal["knott", "natural"] = "knott"


class EnumerateResponse(BaseModel):
    n: int
    mode: str
    expansions: list[ExpansionModel]


class CountRequest(BaseModel):
    n: int = Field(ge=0)
    what: Literal["kappa", "nu", "fib"] = "kappa"


class CountResponse(BaseModel):
    n: int
    what: str
    value: int


class SequenceRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    what: Literal["kappa", "nu", "fib"]
    start: int = Field(alias="from", ge=0)
    stop: int = Field(alias="to", ge=0)


class SequenceResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    what: str
    start: int = Field(serialization_alias="from")
    stop: int = Field(serialization_alias="to")
    values: list[int]


class SubintervalModel(BaseModel):
    kind: Literal["I", "J", "K"]
    bounds: tuple[int, int]


class ClassifyRequest(BaseModel):
    n: int = Field(ge=2)


class ClassifyResponse(BaseModel):
    n: int
    index: int
    parity: Literal["even", "odd"]
    bounds: tuple[int, int]
    subinterval: Optional[SubintervalModel]
    L: int
    R: int
    s1: int
    s1_parity: Literal["even", "odd"]


class VerifyRequest(BaseModel):
    suite: str = "all"
    bound: Optional[int] = Field(default=None, ge=1)


class FailureModel(BaseModel):
    input: str
    expected: str
    actual: str


class SuiteReportModel(BaseModel):
    suite: str
    bound: int
    checks: int
    failures: list[FailureModel]
    elapsed_ms: float
    passed: bool


class VerifyResponse(BaseModel):
    suites: list[SuiteReportModel]
    passed: bool


class HealthResponse(BaseModel):
    status: Literal["ok"]
    version: str
