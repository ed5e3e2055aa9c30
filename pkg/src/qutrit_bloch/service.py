"""Stateless JSON service over the evaluation, scanning and sampling core.

Every handler is a pure function of the request body; responses carry an
explicit ``schema_version`` and are serialized with the same canonical
writer as the CLI, so both channels produce identical documents.
Malformed bodies get a 400 with a machine-readable error object.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .clusters import lookup, scan_region
from .documents import (
    SCHEMA_VERSION,
    catalog_document,
    dumps_canonical,
    errata_document,
    region_document,
    sample_document,
    scene_document,
)
from .errors import QutritBlochError
from .sampling import SamplerConfig
from .state_core import ParamVector


def _json_response(doc: dict[str, Any], status: int = 200) -> Response:
    return Response(dumps_canonical(doc), status_code=status, media_type="application/json")


def _error(code: str, message: str, status: int = 400) -> Response:
    return _json_response(
        {"schema_version": SCHEMA_VERSION, "error": {"code": code, "message": message}},
        status=status,
    )


async def _read_object(request: Request) -> dict[str, Any]:
    try:
        body = await request.json()
    except Exception:
        raise ValueError("request body is not valid JSON")
    if not isinstance(body, dict):
        raise ValueError("request body must be a JSON object")
    return body


def _require_number(body: dict[str, Any], key: str) -> float:
    value = body.get(key)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValueError(f"field {key!r} must be a number")
    return float(value)


def create_app() -> FastAPI:
    app = FastAPI(title="qutrit-bloch", version=__version__, docs_url=None, redoc_url=None)
    # the explorer UI is served from a different origin
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.get("/health")
    def health() -> Response:
        return _json_response({"schema_version": SCHEMA_VERSION, "status": "ok"})

    @app.post("/eval")
    async def eval_point(request: Request) -> Response:
        try:
            body = await _read_object(request)
            raw = body.get("params", {})
            if not isinstance(raw, dict):
                raise ValueError("field 'params' must be an object of parameter names")
            params = ParamVector.from_mapping({k: _require_number(raw, k) for k in raw})
        except (ValueError, QutritBlochError) as exc:
            return _error("bad_request", str(exc))
        return _json_response(scene_document(params))

    @app.post("/scan")
    async def scan(request: Request) -> Response:
        try:
            body = await _read_object(request)
            cluster = body.get("cluster")
            if not isinstance(cluster, str):
                raise ValueError("field 'cluster' must be a string")
            sub = body.get("sub")
            if sub is not None and not isinstance(sub, str):
                raise ValueError("field 'sub' must be a string when present")
            lo = _require_number(body, "min")
            hi = _require_number(body, "max")
            step = _require_number(body, "step")
            fix = body.get("fix")
            if fix is not None:
                if not isinstance(fix, dict):
                    raise ValueError("field 'fix' must be an object")
                fix = {k: _require_number(fix, k) for k in fix}
            case = lookup(cluster, sub)
            grid = scan_region(case, (lo, hi), (lo, hi), step, fixed=fix)
        except (ValueError, QutritBlochError) as exc:
            return _error("bad_request", str(exc))
        return _json_response(region_document(grid))

    @app.get("/clusters")
    def clusters() -> Response:
        return _json_response(catalog_document())

    @app.post("/sample")
    async def sample_points(request: Request) -> Response:
        try:
            body = await _read_object(request)
            method = body.get("method")
            if not isinstance(method, str):
                raise ValueError("field 'method' must be a string")
            seed = body.get("seed")
            count = body.get("count")
            if not isinstance(seed, int) or isinstance(seed, bool):
                raise ValueError("field 'seed' must be an integer")
            if not isinstance(count, int) or isinstance(count, bool):
                raise ValueError("field 'count' must be an integer")
            config = SamplerConfig(method=method, seed=seed, count=count)
        except (ValueError, QutritBlochError) as exc:
            return _error("bad_request", str(exc))
        return _json_response(sample_document(config))

    @app.get("/errata")
    def errata() -> Response:
        return _json_response(errata_document())

    return app
