"""Session-based HTTP API consumed by the web UI.

Sessions are in-memory; per-session mutations are serialized by a lock and
invalidate the cached probabilistic complexes, so a GET never serves stale
data.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field, replace

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from covertop import io as netio
from covertop import network as net
from covertop.complexes import ComplexKind
from covertop.errors import ConfigurationError, NodeNotFoundError, ParseError, SchemaError
from covertop.geometry import Point2
from covertop.network import NetworkConfig, Rect, generate_random
from covertop.probability import (
    build_probabilistic_complex,
    estimate_global_coverage,
    union_point_coverage,
)
from covertop.serialize import (
    coverage_estimate_doc,
    dumps_canonical,
    probabilistic_complex_doc,
)

DEFAULT_N = 30
DEFAULT_K = 8
DEFAULT_EPS = 10.0
DEFAULT_RC = 29.0
DEFAULT_DOMAIN = Rect(0.0, 0.0, 300.0, 300.0)


class ApiError(Exception):
    def __init__(self, status: int, message: str, field_name: str | None = None):
        super().__init__(message)
        self.status = status
        self.message = message
        self.field = field_name

    def response(self) -> JSONResponse:
        body: dict = {"error": self.message}
        if self.field is not None:
            body["field"] = self.field
        return JSONResponse(body, status_code=self.status)


@dataclass
class Session:
    config: NetworkConfig
    lock: threading.Lock = field(default_factory=threading.Lock)
    complex_cache: dict[str, str] = field(default_factory=dict)

    def mutate(self, new_config: NetworkConfig) -> None:
        self.config = new_config
        self.complex_cache.clear()


def _default_config(seed: int = 0) -> NetworkConfig:
    return generate_random(DEFAULT_N, DEFAULT_K, DEFAULT_RC, DEFAULT_EPS, DEFAULT_DOMAIN, seed)


async def _json_body(request: Request) -> dict:
    try:
        body = json.loads(await request.body())
    except json.JSONDecodeError:
        raise ApiError(400, "request body must be valid JSON")
    if not isinstance(body, dict):
        raise ApiError(400, "request body must be a JSON object")
    return body


def _number(body: dict, name: str, required: bool = True) -> float | None:
    if name not in body:
        if required:
            raise ApiError(400, f"missing field: {name}", field_name=name)
        return None
    value = body[name]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ApiError(400, f"field must be a number: {name}", field_name=name)
    return float(value)


def _integer(body: dict, name: str, required: bool = True) -> int | None:
    value = _number(body, name, required)
    if value is None:
        return None
    if value != int(value):
        raise ApiError(400, f"field must be an integer: {name}", field_name=name)
    return int(value)


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="covertop")
    sessions: dict[str, Session] = {}

    def get_session(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise ApiError(404, f"unknown session: {session_id}")
        return session

    @app.exception_handler(ApiError)
    async def handle_api_error(_request, exc: ApiError):
        return exc.response()

    def apply(session: Session, fn, *args):
        with session.lock:
            try:
                session.mutate(fn(session.config, *args))
            except NodeNotFoundError as exc:
                raise ApiError(404, str(exc))
            except ConfigurationError as exc:
                raise ApiError(422, str(exc))

    @app.post("/api/session")
    async def create_session():
        session_id = uuid.uuid4().hex
        sessions[session_id] = Session(config=_default_config())
        return {"id": session_id}

    @app.get("/api/session/{session_id}/network")
    async def get_network(session_id: str):
        session = get_session(session_id)
        return netio.config_to_dict(session.config)

    @app.put("/api/session/{session_id}/network")
    async def put_network(session_id: str, request: Request):
        session = get_session(session_id)
        body = await _json_body(request)
        try:
            config = netio.config_from_dict(body)
        except SchemaError as exc:
            raise ApiError(400, str(exc), field_name=exc.field)
        except ConfigurationError as exc:
            raise ApiError(422, str(exc))
        with session.lock:
            session.mutate(config)
        return netio.config_to_dict(session.config)

    @app.put("/api/session/{session_id}/network/csv")
    async def put_network_csv(session_id: str, request: Request):
        session = get_session(session_id)
        text = (await request.body()).decode("utf-8", errors="replace")
        with session.lock:
            try:
                config = netio.load_csv(
                    text,
                    k=session.config.k,
                    eps=session.config.eps,
                    seed=session.config.seed,
                )
            except ParseError as exc:
                detail = f"{exc} (line {exc.line})" if exc.line is not None else str(exc)
                raise ApiError(400, detail)
            session.mutate(config)
        return netio.config_to_dict(session.config)

    @app.post("/api/session/{session_id}/network/random")
    async def random_network(session_id: str, request: Request):
        session = get_session(session_id)
        body = await _json_body(request)
        n = _integer(body, "n")
        k = _integer(body, "k")
        rc = _number(body, "rc")
        eps = _number(body, "eps")
        seed = _integer(body, "seed", required=False) or 0
        domain = session.config.domain
        with session.lock:
            try:
                session.mutate(generate_random(n, k, rc, eps, domain, seed))
            except ConfigurationError as exc:
                raise ApiError(422, str(exc))
        return netio.config_to_dict(session.config)

    @app.patch("/api/session/{session_id}/nodes/{node_id}")
    async def move_node(session_id: str, node_id: int, request: Request):
        session = get_session(session_id)
        body = await _json_body(request)
        dx = _number(body, "dx")
        dy = _number(body, "dy")
        apply(session, net.move_node, node_id, dx, dy)
        return netio.config_to_dict(session.config)

    @app.post("/api/session/{session_id}/nodes")
    async def add_node(session_id: str, request: Request):
        session = get_session(session_id)
        body = await _json_body(request)
        x = _number(body, "x")
        y = _number(body, "y")
        apply(session, net.add_node, x, y)
        return netio.config_to_dict(session.config)

    @app.delete("/api/session/{session_id}/nodes/{node_id}")
    async def delete_node(session_id: str, node_id: int):
        session = get_session(session_id)
        apply(session, net.delete_node, node_id)
        return netio.config_to_dict(session.config)

    @app.put("/api/session/{session_id}/params")
    async def put_params(session_id: str, request: Request):
        session = get_session(session_id)
        body = await _json_body(request)
        rc = _number(body, "rc", required=False)
        eps = _number(body, "eps", required=False)
        k = _integer(body, "k", required=False)
        seed = _integer(body, "seed", required=False)
        with session.lock:
            config = session.config
            try:
                if seed is not None:
                    config = replace(config, seed=seed)
                if rc is not None:
                    config = net.set_rc(config, rc)
                if eps is not None:
                    config = net.set_eps(config, eps)
                if k is not None:
                    config = net.set_k(config, k)
            except ConfigurationError as exc:
                raise ApiError(422, str(exc))
            session.mutate(config)
        return netio.config_to_dict(session.config)

    @app.get("/api/session/{session_id}/complex")
    async def get_complex(session_id: str, kind: str = "rips"):
        session = get_session(session_id)
        if kind not in ("rips", "cech"):
            raise ApiError(400, f"kind must be rips or cech, got {kind}", field_name="kind")
        with session.lock:
            payload = session.complex_cache.get(kind)
            if payload is None:
                pc = build_probabilistic_complex(session.config, ComplexKind(kind))
                payload = dumps_canonical(probabilistic_complex_doc(pc))
                session.complex_cache[kind] = payload
        return Response(content=payload, media_type="application/json")

    @app.get("/api/session/{session_id}/coverage")
    async def get_coverage(
        session_id: str, samples: int = 1000, resolution: float = 1.0, seed: int = 0
    ):
        session = get_session(session_id)
        try:
            estimate = estimate_global_coverage(session.config, samples, resolution, seed)
        except ValueError as exc:
            raise ApiError(400, str(exc))
        return Response(
            content=dumps_canonical(coverage_estimate_doc(estimate)),
            media_type="application/json",
        )

    @app.get("/api/session/{session_id}/point")
    async def get_point(session_id: str, x: float, y: float):
        session = get_session(session_id)
        p = union_point_coverage(session.config, Point2(x, y))
        return {"num": p.numerator, "den": p.denominator, "value": float(p)}

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
