"""HTTP and server-sent-event surface over the plan service.

Endpoints:

    POST  /sessions                   create a session (optional overrides)
    GET   /sessions/{id}              session state
    PATCH /sessions/{id}/params       partial parameter update (may trigger)
    POST  /sessions/{id}/generate     explicit generation
    GET   /sessions/{id}/stream       SSE: header, events, end marker
    GET   /plans/{id}                 persisted plan (canonical JSON)
    GET   /corpus/lines?start&count   corpus window

All bodies are JSON; stream messages are one JSON document per SSE
``data:`` frame.  Plan responses are emitted through the plan's canonical
serializer so the bytes match the CLI's plan files exactly.
"""

from __future__ import annotations

import json

from fastapi import Body, FastAPI, Request, Response
from fastapi.responses import JSONResponse, StreamingResponse

from .errors import (
    EmptyLogError,
    InvalidConfigError,
    NoPlanError,
    NotArmedError,
    PlanRangeError,
    UnknownPlanError,
    UnknownSessionError,
)
from .session import PlanService

_ERROR_STATUS = (
    (InvalidConfigError, 400, "invalid_config"),
    (PlanRangeError, 400, "range"),
    (EmptyLogError, 400, "empty_log"),
    (NotArmedError, 409, "not_armed"),
    (NoPlanError, 409, "no_plan"),
    (UnknownSessionError, 404, "unknown_session"),
    (UnknownPlanError, 404, "unknown_plan"),
)


def create_app(service: PlanService) -> FastAPI:
    app = FastAPI(title="verseflow", docs_url=None, redoc_url=None)
    app.state.service = service

    for exc_type, status, code in _ERROR_STATUS:
        def _handler(request: Request, exc: Exception,
                     status=status, code=code) -> JSONResponse:
            payload = {"error": code, "message": str(exc)}
            if isinstance(exc, InvalidConfigError):
                payload["field"] = exc.field
            return JSONResponse(status_code=status, content=payload)

        app.add_exception_handler(exc_type, _handler)

    def _plan_response(plan) -> Response:
        return Response(content=plan.to_json(), media_type="application/json")

    @app.post("/sessions")
    def create_session(overrides: dict = Body(default={})) -> dict:
        return service.create_session(overrides).to_dict()

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        return service.get_session(session_id).to_dict()

    @app.patch("/sessions/{session_id}/params")
    def patch_params(session_id: str, patch: dict = Body(default={})) -> dict:
        return service.update_params(session_id, patch).to_dict()

    @app.post("/sessions/{session_id}/generate")
    def generate(session_id: str) -> Response:
        return _plan_response(service.generate(session_id))

    @app.get("/sessions/{session_id}/stream")
    def stream(session_id: str) -> StreamingResponse:
        messages = service.stream(session_id)  # raises before streaming starts

        def sse():
            for message in messages:
                yield f"data: {json.dumps(message, sort_keys=True)}\n\n"

        return StreamingResponse(sse(), media_type="text/event-stream",
                                 headers={"Cache-Control": "no-cache"})

    @app.get("/plans/{plan_id}")
    def get_plan(plan_id: str) -> Response:
        return _plan_response(service.get_plan(plan_id))

    @app.get("/corpus/lines")
    def corpus_lines(start: int = 0, count: int | None = None) -> dict:
        return service.corpus_lines(start, count)

    return app
