"""FastAPI application exposing the package over HTTP.

Run with ``lusztig-series serve`` or ``uvicorn lusztig_series.service.app:app``.
All payloads carry exact decimal strings; bad parameters map to HTTP 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import UsageError
from . import handlers
from .models import (
    HealthResponse,
    MaxResponse,
    ReportEntryModel,
    TableResponse,
    ThresholdResponse,
    ValueResponse,
)

app = FastAPI(
    title="lusztig-series",
    version=__version__,
    description=(
        "Exact maximal Lusztig-series sizes for finite classical groups: "
        "partition and unipotent-character counts, centralizer-shape maxima, "
        "sharp bounds, and golden-table verification."
    ),
)


@app.exception_handler(UsageError)
async def usage_error_handler(_: Request, exc: UsageError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.get("/value/{fn}/{n}", response_model=ValueResponse)
def value(fn: str, n: int) -> ValueResponse:
    return handlers.value_response(fn, n)


@app.get("/table/{which}", response_model=TableResponse)
def table(
    which: int,
    lo: int | None = Query(default=None),
    hi: int | None = Query(default=None),
) -> TableResponse:
    rng = None
    if (lo is None) != (hi is None):
        raise UsageError("lo and hi must be given together")
    if lo is not None and hi is not None:
        rng = (lo, hi)
    return handlers.table_response(which, rng)


@app.get("/max", response_model=MaxResponse, response_model_exclude_none=True)
def max_series(
    family: str,
    n: int,
    parity: str | None = Query(default=None),
    witnesses: bool = Query(default=False),
) -> MaxResponse:
    return handlers.max_response(family, parity, n, witnesses)


@app.get("/verify", response_model=list[ReportEntryModel])
def verify(suite: str = Query(default="all")) -> list[ReportEntryModel]:
    return handlers.verify_entries(suite)


@app.get("/threshold", response_model=ThresholdResponse)
def threshold(family: str, n: int, parity: str | None = Query(default=None)) -> ThresholdResponse:
    return handlers.threshold_response(family, parity, n)
