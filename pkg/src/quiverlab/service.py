"""JSON service exposing the workbench over HTTP.

Endpoints (all bodies and responses are JSON):

    POST /mutate    seed or quiver, plus "k" or "sequence"; returns the
                    mutated seed, the per-step new variables, and the
                    Dynkin type of the final quiver if any
    POST /explore   exchange graph with variables
    POST /class     mutation-class census numbers
    POST /classify  finite-type verdict with witness
    POST /cc        Caldero-Chapoton value of a representation or shift
    GET  /health    liveness probe

Status codes: 400 malformed request, 413 requested limit above the
server cap, 422 well-formed request that fails a mathematical
precondition.  Truncated walks still return 200 with "truncated": true.

Coefficients on the wire are decimal strings: clients whose numbers are
IEEE doubles must not round multi-hundred-digit integers.
"""

from __future__ import annotations

import argparse
from typing import Sequence

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .laurent import NotDivisible, ZeroDivisor
from .quiver import dynkin_type, quiver_from_data, quiver_to_data
from .reptheory import (
    InterpolationInconsistent,
    PrimeCollision,
    ShiftedProjective,
    cc_value,
    rep_from_data,
)
from .seed import (
    Seed,
    classify,
    exchange_graph,
    graph_to_data,
    initial_seed,
    mutate_seed,
    mutation_class,
    seed_from_data,
    seed_to_data,
    variables_of,
)

DEFAULT_SEED_CAP = 20_000
DEFAULT_QUIVER_CAP = 200_000

COMPUTE_ERRORS = (
    NotDivisible,
    ZeroDivisor,
    InterpolationInconsistent,
    PrimeCollision,
    ValueError,
    IndexError,
    ArithmeticError,
)


class _BadRequest(Exception):
    pass


async def _json_body(request: Request) -> dict:
    try:
        data = await request.json()
    except Exception:
        raise _BadRequest("body is not valid JSON") from None
    if not isinstance(data, dict):
        raise _BadRequest("body must be a JSON object")
    return data


def _limit_from(data: dict, key: str, default: int, cap: int) -> int:
    raw = data.get(key, default)
    if not isinstance(raw, int) or isinstance(raw, bool) or raw < 1:
        raise _BadRequest(f'"{key}" must be a positive integer')
    if raw > cap:
        raise HTTPException(
            status_code=413, detail=f'"{key}" {raw} exceeds the server cap {cap}'
        )
    return raw


def _input_seed(data: dict) -> Seed:
    has_seed = "seed" in data
    has_quiver = "quiver" in data
    if has_seed == has_quiver:
        raise _BadRequest('give exactly one of "seed" or "quiver"')
    if has_seed:
        return seed_from_data(data["seed"])
    return initial_seed(quiver_from_data(data["quiver"]))


def _mutation_steps(data: dict) -> list[int]:
    has_k = "k" in data
    has_seq = "sequence" in data
    if has_k == has_seq:
        raise _BadRequest('give exactly one of "k" or "sequence"')
    if has_k:
        k = data["k"]
        if not isinstance(k, int) or isinstance(k, bool):
            raise _BadRequest('"k" must be an integer')
        return [k]
    seq = data["sequence"]
    if not isinstance(seq, list) or not all(
        isinstance(k, int) and not isinstance(k, bool) for k in seq
    ):
        raise _BadRequest('"sequence" must be a list of integers')
    return list(seq)


def create_app(
    max_seeds: int = DEFAULT_SEED_CAP,
    max_quivers: int = DEFAULT_QUIVER_CAP,
    cors_origins: Sequence[str] = ("*",),
) -> FastAPI:
    app = FastAPI(title="quiverlab", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(_BadRequest)
    async def _bad_request(_request: Request, exc: _BadRequest) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.post("/mutate")
    async def mutate(request: Request) -> dict:
        data = await _json_body(request)
        try:
            s = _input_seed(data)
        except ValueError as exc:
            raise _BadRequest(str(exc)) from None
        steps = _mutation_steps(data)
        try:
            new_vars = []
            for k in steps:
                s = mutate_seed(s, k)
                new_vars.append({"k": k, "text": s.cluster[k - 1].to_text()})
        except COMPUTE_ERRORS as exc:
            raise HTTPException(status_code=422, detail=f"{type(exc).__name__}: {exc}")
        t = dynkin_type(s.quiver)
        return {
            "seed": seed_to_data(s),
            "steps": new_vars,
            "dynkin_type": str(t) if t else None,
        }

    @app.post("/explore")
    async def explore(request: Request) -> dict:
        data = await _json_body(request)
        limit = _limit_from(data, "limit", max_seeds, max_seeds)
        include_clusters = bool(data.get("clusters", False))
        try:
            q = quiver_from_data(data.get("quiver"))
        except ValueError as exc:
            raise _BadRequest(str(exc)) from None
        try:
            graph = exchange_graph(q, limit)
        except COMPUTE_ERRORS as exc:
            raise HTTPException(status_code=422, detail=f"{type(exc).__name__}: {exc}")
        payload = graph_to_data(graph, include_clusters=include_clusters)
        payload["variables"] = variables_of(graph).texts()
        return payload

    @app.post("/class")
    async def census(request: Request) -> dict:
        data = await _json_body(request)
        limit = _limit_from(data, "limit", max_quivers, max_quivers)
        try:
            q = quiver_from_data(data.get("quiver"))
        except ValueError as exc:
            raise _BadRequest(str(exc)) from None
        try:
            cls = mutation_class(q, limit)
        except COMPUTE_ERRORS as exc:
            raise HTTPException(status_code=422, detail=f"{type(exc).__name__}: {exc}")
        return {
            "size": cls.size,
            "double_arrows": cls.multiple_arrow_members,
            "max_mult": cls.max_multiplicity,
            "truncated": cls.truncated,
        }

    @app.post("/classify")
    async def classify_endpoint(request: Request) -> dict:
        data = await _json_body(request)
        limit = _limit_from(data, "limit", max_quivers, max_quivers)
        early = data.get("early_exit", True)
        if not isinstance(early, bool):
            raise _BadRequest('"early_exit" must be a boolean')
        try:
            q = quiver_from_data(data.get("quiver"))
        except ValueError as exc:
            raise _BadRequest(str(exc)) from None
        try:
            result = classify(q, limit, early_exit=early)
        except COMPUTE_ERRORS as exc:
            raise HTTPException(status_code=422, detail=f"{type(exc).__name__}: {exc}")
        return {
            "verdict": result.verdict,
            "type": str(result.dynkin) if result.dynkin else None,
            "witness": list(result.witness) if result.witness is not None else None,
            "reason": result.reason,
            "explored": result.explored,
        }

    @app.post("/cc")
    async def cc(request: Request) -> dict:
        data = await _json_body(request)
        has_rep = "rep" in data
        has_shift = "shifted" in data
        if has_rep == has_shift:
            raise _BadRequest('give exactly one of "rep" or "shifted"')
        try:
            if has_rep:
                obj = rep_from_data(data["rep"])
            else:
                vertex = data["shifted"]
                if not isinstance(vertex, int) or isinstance(vertex, bool):
                    raise _BadRequest('"shifted" must be an integer vertex')
                if "quiver" not in data:
                    raise _BadRequest('"shifted" needs a "quiver"')
                obj = ShiftedProjective(quiver_from_data(data["quiver"]), vertex)
        except _BadRequest:
            raise
        except ValueError as exc:
            raise _BadRequest(str(exc)) from None
        try:
            value = cc_value(obj)
        except COMPUTE_ERRORS as exc:
            raise HTTPException(status_code=422, detail=f"{type(exc).__name__}: {exc}")
        return {"value": value.to_text(), "terms": value.to_wire()}

    return app


app = create_app()


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="quiverlab-serve", description="serve the quiver workbench over HTTP"
    )
    parser.add_argument("--addr", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8787)
    parser.add_argument("--seed-limit", type=int, default=DEFAULT_SEED_CAP)
    parser.add_argument("--class-limit", type=int, default=DEFAULT_QUIVER_CAP)
    parser.add_argument(
        "--cors-origin",
        action="append",
        default=None,
        metavar="ORIGIN",
        help="allowed origin (repeatable; default: any)",
    )
    args = parser.parse_args(argv)

    import uvicorn

    uvicorn.run(
        create_app(
            max_seeds=args.seed_limit,
            max_quivers=args.class_limit,
            cors_origins=args.cors_origin or ("*",),
        ),
        host=args.addr,
        port=args.port,
        log_level="info",
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
