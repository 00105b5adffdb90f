"""FastAPI service exposing the command surface.

Every endpoint takes the problem file's text plus the command's options
and returns the deterministic text report together with the exit code
the CLI propagates.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI
from pydantic import BaseModel, Field

from . import __version__
from .commands import run

app = FastAPI(
    title="pclosed",
    description=(
        "Foliation closures, algebraic solutions and ideal classes for "
        "derivations on polynomial rings in characteristic p."
    ),
    version=__version__,
)


class RunRequest(BaseModel):
    problem: str = Field("", description="problem file contents")
    expr: Optional[str] = Field(None, description="expression for `check`")
    max_deg: Optional[int] = Field(
        None, description="override the problem's enumeration degree"
    )


class RunResponse(BaseModel):
    report: str
    exit_code: int


class HealthResponse(BaseModel):
    status: str
    version: str


@app.get("/v1/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


def _handle(command: str, req: RunRequest) -> RunResponse:
    result = run(
        command,
        req.problem if req.problem else None,
        expr=req.expr,
        max_deg=req.max_deg,
    )
    return RunResponse(report=result.report, exit_code=result.exit_code)


@app.post("/v1/closure", response_model=RunResponse)
def closure(req: RunRequest) -> RunResponse:
    return _handle("closure", req)


@app.post("/v1/pi", response_model=RunResponse)
def pi(req: RunRequest) -> RunResponse:
    return _handle("pi", req)


@app.post("/v1/check", response_model=RunResponse)
def check(req: RunRequest) -> RunResponse:
    return _handle("check", req)


@app.post("/v1/assoc", response_model=RunResponse)
def assoc(req: RunRequest) -> RunResponse:
    return _handle("assoc", req)


@app.post("/v1/bound", response_model=RunResponse)
def bound(req: RunRequest) -> RunResponse:
    return _handle("bound", req)


@app.post("/v1/theta", response_model=RunResponse)
def theta(req: RunRequest) -> RunResponse:
    return _handle("theta", req)


@app.post("/v1/selftest", response_model=RunResponse)
def selftest(req: RunRequest) -> RunResponse:
    return _handle("selftest", req)
