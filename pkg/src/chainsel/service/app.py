"""HTTP service exposing the ranking pipeline.

The KB lives in a snapshot holder: every request reads one immutable snapshot,
and an override builds a new KB and swaps the reference atomically, so
concurrent rankings see either the old or the new version, never a mix.  All
compute paths are pure functions of (snapshot, request body).
"""

import json
import os
import threading

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from ..analysis import parse_edit, weight_stability_interval, what_if
from ..elicitation import parse_requirements
from ..errors import ChainselError, OverrideError, UnknownIdError
from ..kb import (
    KnowledgeBase,
    apply_override,
    builtin_knowledge_base,
    load_knowledge_base,
    serialize_knowledge_base,
)
from ..mcdm import rank_alternatives
from ..report import interval_document, ranking_document
from .schemas import (
    OverrideRequest,
    OverrideResponse,
    IntervalResponse,
    RankRequest,
    SensitivityRequest,
    WhatIfRequest,
)


class KBStore:
    """Holds the current KB snapshot; overrides swap it atomically."""

    def __init__(self, kb: KnowledgeBase, path: str | None = None, persist: bool = False):
        self._kb = kb
        self._path = path
        self._persist = persist and path is not None
        self._lock = threading.Lock()

    @property
    def kb(self) -> KnowledgeBase:
        return self._kb

    def override(self, alternative_id: str, criterion_id: str, value: float) -> KnowledgeBase:
        with self._lock:
            new_kb = apply_override(self._kb, alternative_id, criterion_id, value)
            if self._persist:
                tmp = self._path + ".tmp"
                with open(tmp, "w", encoding="utf-8") as fh:
                    json.dump(serialize_knowledge_base(new_kb), fh, indent=2, ensure_ascii=False)
                    fh.write("\n")
                os.replace(tmp, self._path)
            self._kb = new_kb
            return new_kb


def _error_status(exc: ChainselError) -> int:
    if isinstance(exc, UnknownIdError):
        return 404
    if isinstance(exc, OverrideError):
        return 409
    return 400


def create_app(
    kb: KnowledgeBase | None = None,
    kb_path: str | None = None,
    kb_write: bool = False,
) -> FastAPI:
    """Build the service around a KB snapshot (builtin unless given or loaded)."""
    if kb is None:
        if kb_path is not None:
            with open(kb_path, encoding="utf-8") as fh:
                kb = load_knowledge_base(fh.read())
        else:
            kb = builtin_knowledge_base()
    store = KBStore(kb, path=kb_path, persist=kb_write)

    app = FastAPI(title="chainsel", docs_url=None, redoc_url=None)
    app.state.store = store

    @app.exception_handler(ChainselError)
    async def chainsel_error(_request: Request, exc: ChainselError):
        return JSONResponse(
            status_code=_error_status(exc),
            content={"detail": {"type": type(exc).__name__, "message": str(exc)}},
        )

    @app.exception_handler(RequestValidationError)
    async def request_error(_request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"detail": {"type": "RequestValidationError", "message": str(exc.errors())}},
        )

    @app.get("/api/criteria")
    def get_criteria():
        snapshot = store.kb
        return {
            "kb_version": snapshot.version,
            "kb_updated_at": snapshot.updated_at,
            "criteria": serialize_knowledge_base(snapshot)["criteria"],
        }

    @app.get("/api/alternatives")
    def get_alternatives():
        snapshot = store.kb
        return {
            "kb_version": snapshot.version,
            "kb_updated_at": snapshot.updated_at,
            "alternatives": serialize_knowledge_base(snapshot)["alternatives"],
        }

    @app.post("/api/rank")
    def post_rank(body: RankRequest, trace: int = Query(default=0)):
        snapshot = store.kb
        requirements = parse_requirements(body.requirements.to_document(), snapshot)
        result = rank_alternatives(snapshot, requirements, with_trace=bool(trace))
        return ranking_document(snapshot, result, include_trace=bool(trace))

    @app.post("/api/sensitivity", response_model=IntervalResponse)
    def post_sensitivity(body: SensitivityRequest):
        snapshot = store.kb
        requirements = parse_requirements(body.requirements.to_document(), snapshot)
        interval = weight_stability_interval(
            snapshot, requirements, body.criterion, body.resolution
        )
        return IntervalResponse(**interval_document(snapshot, interval))

    @app.post("/api/whatif")
    def post_whatif(body: WhatIfRequest, trace: int = Query(default=0)):
        snapshot = store.kb
        requirements = parse_requirements(body.requirements.to_document(), snapshot)
        edits = [parse_edit(e) for e in body.edits]
        result = what_if(snapshot, requirements, edits, with_trace=bool(trace))
        return ranking_document(snapshot, result, include_trace=bool(trace))

    @app.put("/api/kb/overrides", response_model=OverrideResponse)
    def put_override(body: OverrideRequest):
        new_kb = store.override(body.alternative, body.criterion, body.value)
        return OverrideResponse(
            kb_version=new_kb.version,
            kb_updated_at=new_kb.updated_at,
            alternative=body.alternative,
            criterion=body.criterion,
            value=body.value,
        )

    return app
