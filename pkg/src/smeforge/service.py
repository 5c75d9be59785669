"""HTTP API over the engine for the composer UI.

The repository is loaded once and shared immutably across handlers; method
constructions live in an in-memory store whose ids stay stable for the
server lifetime. Reads never block each other; writes to one construction
serialize through a per-construction lock, so the second of two concurrent
writes observes the first's result. All GETs are pure over the repository
plus a store snapshot.
"""

from __future__ import annotations

import os
import threading
from typing import Any, Callable, Optional

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from smeforge import assembly, metrics, project
from smeforge.errors import (
    CycleError,
    PreconditionError,
    SmeError,
    UnknownIdError,
)
from smeforge.metamodel import FragmentKind
from smeforge.repository import (
    Origin,
    Repository,
    fragment_to_doc,
    query,
    relations_of,
)

UI_ORIGIN_ENV_VAR = "SMEFORGE_UI_ORIGIN"


class Utf8JSONResponse(JSONResponse):
    media_type = "application/json; charset=utf-8"


class SessionStore:
    """In-memory constructions with serialized per-construction writes."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._constructions: dict[str, assembly.MethodConstruction] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._next_id = 1

    def create(self, construction: assembly.MethodConstruction) -> str:
        with self._lock:
            construction_id = f"m{self._next_id}"
            self._next_id += 1
            self._constructions[construction_id] = construction
            self._locks[construction_id] = threading.Lock()
            return construction_id

    def get(self, construction_id: str) -> assembly.MethodConstruction:
        with self._lock:
            try:
                return self._constructions[construction_id]
            except KeyError:
                raise UnknownIdError(
                    f"unknown construction {construction_id!r}",
                    subjects=[construction_id],
                ) from None

    def mutate(
        self,
        construction_id: str,
        update: Callable[[assembly.MethodConstruction], assembly.MethodConstruction],
    ) -> assembly.MethodConstruction:
        self.get(construction_id)  # raises UNKNOWN_ID before acquiring
        with self._locks[construction_id]:
            current = self._constructions[construction_id]
            updated = update(current)
            self._constructions[construction_id] = updated
            return updated


def _error(status: int, code: str, detail: str, **extra: Any) -> JSONResponse:
    return Utf8JSONResponse({"error": code, "detail": detail, **extra}, status_code=status)


def create_app(repo: Repository) -> FastAPI:
    app = FastAPI(title="smeforge", docs_url=None, redoc_url=None,
                  default_response_class=Utf8JSONResponse)
    origins = os.environ.get(UI_ORIGIN_ENV_VAR, "*").split(",")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[o.strip() for o in origins],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore()
    app.state.repository = repo
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    def malformed_body(request: Request, exc: RequestValidationError) -> JSONResponse:
        return _error(400, "MALFORMED_BODY", str(exc.errors()))

    @app.exception_handler(UnknownIdError)
    def unknown_id(request: Request, exc: UnknownIdError) -> JSONResponse:
        return _error(404, exc.code, exc.message, subjects=list(exc.subjects))

    @app.exception_handler(SmeError)
    def domain_error(request: Request, exc: SmeError) -> JSONResponse:
        return _error(422, exc.code, exc.message, subjects=list(exc.subjects))

    def construction_doc(construction_id: str) -> dict[str, Any]:
        doc = assembly.construction_to_doc(store.get(construction_id))
        doc["id"] = construction_id
        return doc

    @app.get("/fragments")
    def list_fragments(
        kind: Optional[str] = None,
        origin: Optional[str] = None,
        q: Optional[str] = None,
    ) -> Any:
        try:
            kind_filter = FragmentKind(kind) if kind else None
            origin_filter = Origin(origin) if origin else None
        except ValueError as exc:
            return _error(400, "MALFORMED_QUERY", str(exc))
        found = query(repo, kind=kind_filter, origin=origin_filter, name_contains=q)
        return [fragment_to_doc(f) for f in found]

    @app.get("/fragments/{fragment_id}")
    def get_fragment(fragment_id: str) -> Any:
        fragment = repo.fragment(fragment_id)
        relations = relations_of(repo, fragment_id)
        return {
            "fragment": fragment_to_doc(fragment),
            "cells": [
                {"row": c.row, "col": c.col, "value": c.value.value}
                for c in relations.cells
            ],
            "predecessors": list(relations.predecessors),
            "successors": list(relations.successors),
        }

    @app.post("/methods", status_code=201)
    def create_method(payload: Optional[dict] = Body(default=None)) -> Any:
        name = "untitled method"
        if payload is not None:
            if not isinstance(payload, dict) or not isinstance(payload.get("name", ""), str):
                return _error(400, "MALFORMED_BODY", "expected {\"name\": string}")
            name = payload.get("name") or name
        construction_id = store.create(assembly.MethodConstruction(name=name))
        return {"id": construction_id}

    @app.get("/methods/{construction_id}")
    def get_method(construction_id: str) -> Any:
        return construction_doc(construction_id)

    @app.put("/methods/{construction_id}/selection")
    def put_selection(construction_id: str, payload: dict = Body(...)) -> Any:
        chosen = payload.get("chosen")
        if not isinstance(chosen, list) or not all(isinstance(i, str) for i in chosen):
            return _error(400, "MALFORMED_BODY", "expected {\"chosen\": [fragment ids]}")
        store.mutate(
            construction_id,
            lambda current: assembly.with_selection(current, repo, chosen),
        )
        return construction_doc(construction_id)

    @app.post("/methods/{construction_id}/closure")
    def post_closure(construction_id: str) -> Any:
        store.mutate(
            construction_id,
            lambda current: assembly.apply_closure(current, repo),
        )
        return construction_doc(construction_id)

    @app.get("/methods/{construction_id}/report")
    def get_report(construction_id: str) -> Any:
        report = assembly.validate_method(store.get(construction_id), repo)
        return assembly.report_to_doc(report)

    @app.get("/methods/{construction_id}/order")
    def get_order(construction_id: str) -> Any:
        construction = store.get(construction_id)
        try:
            return {"order": assembly.order_tasks(construction, repo)}
        except (PreconditionError, CycleError) as exc:
            report = assembly.validate_method(construction, repo)
            return _error(
                409, exc.code, exc.message, report=assembly.report_to_doc(report)
            )

    @app.get("/methods/{construction_id}/export")
    def get_export(construction_id: str) -> Any:
        construction = store.get(construction_id)
        report = assembly.validate_method(construction, repo)
        if not report.ok:
            return _error(
                409,
                "PRECONDITION",
                "method fails validation",
                report=assembly.report_to_doc(report),
            )
        return assembly.export_method(construction, repo)

    @app.post("/metrics/coverage")
    def post_coverage(payload: dict = Body(...)) -> Any:
        corpus = metrics.load_corpus_doc(payload)
        report = metrics.domain_coverage(
            corpus, metrics.default_fragment_set(repo), repo
        )
        return metrics.coverage_report_to_doc(report)

    @app.post("/metrics/usability")
    def post_usability(payload: dict = Body(...)) -> Any:
        spec = project.load_project_doc(payload)
        for requirement in spec.requirements:
            for fragment_id in (*requirement.tasks, *requirement.techniques):
                if fragment_id not in repo:
                    return _error(
                        422,
                        "UNKNOWN_FRAGMENT",
                        f"requirement {requirement.id}: unknown fragment {fragment_id!r}",
                        subjects=[requirement.id, fragment_id],
                    )
        report = project.usability(spec)
        return project.project_report_to_doc(spec, report)

    return app
