"""HTTP facade for interactive diff sessions.

State lives in process memory: a session holds the line pair, an action
history with an undo cursor, and a revision counter.  Every mutating request
must quote the revision it saw; a mismatch gets 409 so two concurrent
editors cannot silently interleave.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import HTMLResponse, PlainTextResponse
from pydantic import BaseModel

from .differ import InfeasibleDiffError, shortest_diff
from .feedback import (
    FeedbackAction,
    FeedbackState,
    InvalidActionError,
    action_to_obj,
    diff_fix,
    parse_action,
)
from .model import Diff, LinePair, build_line_pair, diff_rows, render_unified

MAX_LINES = 3000


class CreateSessionBody(BaseModel):
    old: str
    new: str
    strip_blank: bool = False


class FeedbackBody(BaseModel):
    revision: int
    action: dict


class RevisionBody(BaseModel):
    revision: int


@dataclass
class Session:
    session_id: str
    pair: LinePair
    base: Diff
    history: list[tuple[FeedbackAction, Diff]] = field(default_factory=list)
    cursor: int = 0
    revision: int = 0

    @property
    def actions(self) -> list[FeedbackAction]:
        return [action for action, _ in self.history[: self.cursor]]

    @property
    def diff(self) -> Diff:
        if self.cursor == 0:
            return self.base
        return self.history[self.cursor - 1][1]

    def state(self, feasible: bool = True, conflict: str | None = None) -> dict:
        pair = self.pair
        rows = [
            {
                "kind": kind,
                "old": i,
                "new": j,
                "text": pair.old_text(i) if i is not None else pair.new_text(j),
            }
            for kind, i, j in diff_rows(pair, self.diff)
        ]
        warnings = FeedbackState.from_actions(self.actions, pair).warnings
        return {
            "session_id": self.session_id,
            "revision": self.revision,
            "old_lines": list(pair.old_lines),
            "new_lines": list(pair.new_lines),
            "rows": rows,
            "actions": [action_to_obj(a) for a in self.actions],
            "can_undo": self.cursor > 0,
            "can_redo": self.cursor < len(self.history),
            "edge_count": len(self.diff),
            "feasible": feasible,
            "conflict": conflict,
            "warnings": list(warnings),
        }


_ROOT_PAGE = """<!doctype html>
<title>idiff</title>
<h1>idiff service</h1>
<p>The API is running. Endpoints: POST /sessions, GET /sessions/{id},
POST /sessions/{id}/feedback, /undo, /redo, GET /sessions/{id}/export,
GET /health.</p>
<p>The browser UI lives in the repository's <code>frontend/</code>
directory; open its <code>index.html</code> and point it here.</p>
"""


def create_app() -> FastAPI:
    app = FastAPI(title="idiff")
    # the companion UI is opened from disk, so its origin is opaque
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    lock = threading.Lock()

    def get_session(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(404, f"no such session: {session_id}")
        return session

    def check_revision(session: Session, revision: int) -> None:
        if revision != session.revision:
            raise HTTPException(409, f"stale revision {revision}, session is at {session.revision}")

    @app.get("/", include_in_schema=False)
    def root() -> HTMLResponse:
        return HTMLResponse(_ROOT_PAGE)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody) -> dict:
        for name, text in (("old", body.old), ("new", body.new)):
            if text.count("\n") > MAX_LINES:
                raise HTTPException(413, f"{name} side exceeds {MAX_LINES} lines")
        pair = build_line_pair(body.old, body.new, strip_blank=body.strip_blank)
        if pair.n > MAX_LINES or pair.m > MAX_LINES:
            raise HTTPException(413, f"inputs exceed {MAX_LINES} lines per side")
        session = Session(uuid.uuid4().hex, pair, shortest_diff(pair))
        with lock:
            sessions[session.session_id] = session
        return session.state()

    @app.get("/sessions/{session_id}")
    def read_session(session_id: str) -> dict:
        return get_session(session_id).state()

    @app.post("/sessions/{session_id}/feedback")
    def post_feedback(session_id: str, body: FeedbackBody) -> dict:
        with lock:
            session = get_session(session_id)
            check_revision(session, body.revision)
            try:
                action = parse_action(body.action)
            except InvalidActionError as exc:
                raise HTTPException(422, str(exc)) from exc
            current = FeedbackState.from_actions(session.actions, session.pair)
            if action in current.actions:
                return session.state()
            try:
                advanced = current.with_action(action, session.pair)
            except InvalidActionError as exc:
                raise HTTPException(422, str(exc)) from exc
            try:
                fixed = diff_fix(session.pair, advanced, reference=session.diff)
            except InfeasibleDiffError as exc:
                return session.state(feasible=False, conflict=str(exc))
            del session.history[session.cursor :]
            session.history.append((action, fixed))
            session.cursor += 1
            session.revision += 1
            return session.state()

    @app.post("/sessions/{session_id}/undo")
    def post_undo(session_id: str, body: RevisionBody) -> dict:
        with lock:
            session = get_session(session_id)
            check_revision(session, body.revision)
            if session.cursor > 0:
                session.cursor -= 1
                session.revision += 1
            return session.state()

    @app.post("/sessions/{session_id}/redo")
    def post_redo(session_id: str, body: RevisionBody) -> dict:
        with lock:
            session = get_session(session_id)
            check_revision(session, body.revision)
            if session.cursor < len(session.history):
                session.cursor += 1
                session.revision += 1
            return session.state()

    @app.get("/sessions/{session_id}/export")
    def export_session(session_id: str, format: str = "unified"):
        session = get_session(session_id)
        if format == "unified":
            return PlainTextResponse(render_unified(session.pair, session.diff))
        if format == "actions":
            return [action_to_obj(a) for a in session.actions]
        raise HTTPException(422, f"unknown export format: {format}")

    return app
