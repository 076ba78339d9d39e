"""FastAPI service exposing the counting engine.

One POST endpoint per counting job; the CLI drives the same runner
functions in process, so the service layer owns result rendering and
optional oracle cross-checking.  Every response carries the echoed
query, the result (string-encoded integer or polynomial, or a table for
growth/verify jobs), the elapsed time, and the verification outcome:
true/false when an oracle was run, null when the inputs are outside
oracle bounds or checking was not requested.
"""

from __future__ import annotations

import time
from dataclasses import asdict

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import counting, growth, oracle, selfcheck
from ..errors import CrossCheckError, GuardError
from .schemas import (
    AztecRequest,
    DimerRequest,
    FixedRequest,
    GrowthRequest,
    HosoyaRequest,
    JobResponse,
    MatchingPolyRequest,
    MonomerBoundaryRequest,
    PartitionRequest,
    SelfCheckRequest,
    parse_rational,
)

app = FastAPI(
    title="gridcover",
    version="0.1.0",
    description="Exact monomer-dimer and domino-tiling counts on grid regions",
)


@app.exception_handler(GuardError)
async def _guard_handler(request: Request, exc: GuardError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc), "kind": "guard"})


@app.exception_handler(CrossCheckError)
async def _crosscheck_handler(request: Request, exc: CrossCheckError) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc), "kind": "crosscheck"})


@app.exception_handler(ValueError)
async def _usage_handler(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc), "kind": "usage"})


def _within_brute_bounds(m: int, n: int) -> bool:
    return m * n <= oracle.MAX_BRUTE_CELLS


def _respond(req, result, started: float, verified: bool | None) -> JobResponse:
    return JobResponse(
        query=req.model_dump(),
        result=result,
        elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
        verified=verified,
    )


def format_matching_polynomial(coeffs: list[int]) -> str:
    chunks = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            chunks.append(str(c))
        else:
            z = "z" if k == 1 else f"z^{k}"
            chunks.append(z if c == 1 else f"{c}*{z}")
    return " + ".join(chunks) if chunks else "0"


def run_partition(req: PartitionRequest) -> JobResponse:
    started = time.perf_counter()
    verified = None
    if req.mode == "symbolic":
        poly = counting.partition_function(req.m, req.n, req.max_state_bits)
        result = poly.text()
        if req.verify and _within_brute_bounds(req.m, req.n):
            verified = poly == oracle.brute_force_partition(req.m, req.n)
    else:
        v0, x0, y0 = (parse_rational(w) for w in req.weights)
        value = counting.partition_value(req.m, req.n, v0, x0, y0, req.max_state_bits)
        result = str(value)
        if req.verify and _within_brute_bounds(req.m, req.n):
            brute = oracle.brute_force_partition(req.m, req.n)
            verified = brute.evaluate(v0, x0, y0) == value
    return _respond(req, result, started, verified)


def run_matching_poly(req: MatchingPolyRequest) -> JobResponse:
    started = time.perf_counter()
    coeffs = counting.matching_polynomial(req.m, req.n, req.max_state_bits)
    verified = None
    if req.verify and _within_brute_bounds(req.m, req.n):
        brute = [0] * (req.m * req.n // 2 + 1)
        for _, nx, ny, c in oracle.brute_force_partition(req.m, req.n).sorted_terms():
            brute[nx + ny] += c
        verified = brute == coeffs
    return _respond(req, format_matching_polynomial(coeffs), started, verified)


def run_hosoya(req: HosoyaRequest) -> JobResponse:
    started = time.perf_counter()
    value = counting.hosoya_index(req.m, req.n, req.max_state_bits)
    verified = None
    if req.verify and _within_brute_bounds(req.m, req.n):
        verified = oracle.brute_force_partition(req.m, req.n).evaluate(1, 1, 1) == value
    return _respond(req, str(value), started, verified)


def run_dimer(req: DimerRequest) -> JobResponse:
    started = time.perf_counter()
    x0 = parse_rational(req.x_weight)
    y0 = parse_rational(req.y_weight)
    value = counting.pure_dimer_count(req.m, req.n, x0, y0, req.max_state_bits)
    verified = None
    if req.verify and _within_brute_bounds(req.m, req.n):
        verified = oracle.brute_force_partition(req.m, req.n).evaluate(0, x0, y0) == value
    return _respond(req, str(value), started, verified)


def run_monomer_boundary(req: MonomerBoundaryRequest) -> JobResponse:
    started = time.perf_counter()
    value = counting.single_boundary_monomer_count(
        req.m, req.n, req.check_entries, req.max_state_bits
    )
    verified = None
    if req.verify and _within_brute_bounds(req.m, req.n):
        verified = oracle.brute_force_fixed(req.m, req.n, {(1, 1)}) == value
    return _respond(req, str(value), started, verified)


def run_fixed(req: FixedRequest) -> JobResponse:
    started = time.perf_counter()
    sites = frozenset(map(tuple, req.sites))
    value = counting.fixed_monomer_count(req.m, req.n, sites, req.max_state_bits)
    verified = None
    if req.verify and _within_brute_bounds(req.m, req.n):
        verified = oracle.brute_force_fixed(req.m, req.n, sites) == value
    return _respond(req, str(value), started, verified)


def run_aztec(req: AztecRequest) -> JobResponse:
    started = time.perf_counter()
    region = req.region()
    if region.sites:
        value = counting.aztec_octagon_holes_count(region, req.max_state_bits)
    else:
        value = counting.aztec_octagon_count(region, req.max_state_bits)
    verified = None
    if req.verify and _within_brute_bounds(req.m, req.n):
        blocked = region.removed_cells() | region.sites
        verified = oracle.brute_force_fixed(req.m, req.n, blocked) == value
    return _respond(req, str(value), started, verified)


def run_growth(req: GrowthRequest) -> JobResponse:
    started = time.perf_counter()
    table = growth.growth_estimate(req.max_m, req.max_n, req.mode, req.max_state_bits)
    verified = None
    if req.verify:
        verified = True
        for (m, n), entry in table.entries.items():
            if not _within_brute_bounds(m, n):
                continue
            brute = oracle.brute_force_partition(m, n)
            want = brute.evaluate(1, 1, 1) if req.mode == "hosoya" else brute.evaluate(0, 1, 1)
            if want != entry.count:
                verified = False
    return _respond(req, table.to_json_dict(), started, verified)


def run_self_check(req: SelfCheckRequest) -> JobResponse:
    started = time.perf_counter()
    results = selfcheck.run_self_checks(req.max_m)
    report = {"checks": [asdict(r) for r in results], "passed": all(r.ok for r in results)}
    return _respond(req, report, started, report["passed"])


# Subcommand name -> (request model, runner); the CLI drives this table
# in process, the endpoints below expose it over HTTP.
RUNNERS = {
    "partition": (PartitionRequest, run_partition),
    "matching-poly": (MatchingPolyRequest, run_matching_poly),
    "hosoya": (HosoyaRequest, run_hosoya),
    "dimer": (DimerRequest, run_dimer),
    "monomer-boundary": (MonomerBoundaryRequest, run_monomer_boundary),
    "fixed": (FixedRequest, run_fixed),
    "aztec": (AztecRequest, run_aztec),
    "growth": (GrowthRequest, run_growth),
    "verify": (SelfCheckRequest, run_self_check),
}


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/partition", response_model=JobResponse)
def partition(req: PartitionRequest) -> JobResponse:
    return run_partition(req)


@app.post("/matching-poly", response_model=JobResponse)
def matching_poly(req: MatchingPolyRequest) -> JobResponse:
    return run_matching_poly(req)


@app.post("/hosoya", response_model=JobResponse)
def hosoya(req: HosoyaRequest) -> JobResponse:
    return run_hosoya(req)


@app.post("/dimer", response_model=JobResponse)
def dimer(req: DimerRequest) -> JobResponse:
    return run_dimer(req)


@app.post("/monomer-boundary", response_model=JobResponse)
def monomer_boundary(req: MonomerBoundaryRequest) -> JobResponse:
    return run_monomer_boundary(req)


@app.post("/fixed", response_model=JobResponse)
def fixed(req: FixedRequest) -> JobResponse:
    return run_fixed(req)


@app.post("/aztec", response_model=JobResponse)
def aztec(req: AztecRequest) -> JobResponse:
    return run_aztec(req)


@app.post("/growth", response_model=JobResponse)
def growth_endpoint(req: GrowthRequest) -> JobResponse:
    return run_growth(req)


@app.post("/verify", response_model=JobResponse)
def verify(req: SelfCheckRequest) -> JobResponse:
    return run_self_check(req)
