"""Turn-based game sessions over HTTP so a remote Painter can play live.

One session wraps one Game: the Builder side runs server-side, the client is
the Painter. Strict alternation per session: after every request the session
either awaits one color for the proposed edge or is finished. All messages
reuse the transcript JSON field names (config/rounds/outcome, edge as [u, v]).

Endpoints
    POST /games               create a session, first edge already proposed
    GET  /games/{id}          full state snapshot
    POST /games/{id}/color    color the proposed edge, get the next move or end
    WS   /games/{id}/events   event channel: pushes color/move/end, accepts color
    GET  /builders            strategies a new-game form may offer

Sessions live in memory. With a transcript directory configured (the
RAMSEY_TRANSCRIPT_DIR environment variable or the create_app argument), every
session appends its rounds to ``<id>.jsonl`` as they happen, so a crashed
service can replay finished and half-played games from disk.
"""

from __future__ import annotations

import asyncio
import json
import os
import uuid
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .engine import Game, GameConfig, GoalKind, InvalidConfig, Outcome
from .graph import Color, Edge
from .registry import advertised_builders, builder_for


class ServiceError(Exception):
    code = "ServiceError"
    status = 400


class UnknownSession(ServiceError):
    code = "UnknownSession"
    status = 404


class WrongEdge(ServiceError):
    code = "WrongEdge"
    status = 409


class SessionFinished(ServiceError):
    code = "SessionFinished"
    status = 409


class NewGameRequest(BaseModel):
    k: int
    n: int
    goal: str
    builder: Optional[str] = None


class ColorRequest(BaseModel):
    edge: list[int] = Field(min_length=2, max_length=2)
    color: str


def _config_dict(cfg: GameConfig) -> dict:
    return {"k": cfg.k, "n": cfg.n, "goal": cfg.goal.value, "bound": cfg.bound}


def _outcome_dict(o: Outcome) -> dict:
    doc: dict = {"kind": o.kind.value, "rounds_used": o.rounds_used}
    if o.witness is not None:
        doc["witness"] = {
            "kind": o.witness.kind.value,
            "edges": [[e.u, e.v] for e in o.witness.edges],
        }
    return doc


class Session:
    """One game plus its event subscribers and optional transcript file."""

    def __init__(self, sid: str, game: Game, transcript_path: Optional[Path]) -> None:
        self.id = sid
        self.game = game
        self.subscribers: list[asyncio.Queue] = []
        self.transcript_path = transcript_path

    # -- wire messages ---------------------------------------------------

    def snapshot(self) -> dict:
        game = self.game
        doc: dict = {
            "type": "state",
            "id": self.id,
            "config": _config_dict(game.cfg),
            "rounds": [
                {"i": r.index, "edge": [r.edge.u, r.edge.v], "color": r.color.value, "by": r.by}
                for r in game.rounds
            ],
            "rounds_used": game.rounds_used,
            "bound": game.cfg.bound,
            "proposed": None,
            "outcome": None,
        }
        if game.proposed is not None:
            doc["proposed"] = [game.proposed.u, game.proposed.v]
            doc["by"] = getattr(game.builder, "annotation", game.builder.name)
        if game.outcome is not None:
            doc["outcome"] = _outcome_dict(game.outcome)
        return doc

    def move_message(self) -> dict:
        edge = self.game.proposed
        assert edge is not None
        return {
            "type": "move",
            "id": self.id,
            "i": self.game.rounds_used + 1,
            "edge": [edge.u, edge.v],
            "by": getattr(self.game.builder, "annotation", self.game.builder.name),
        }

    def end_message(self) -> dict:
        assert self.game.outcome is not None
        return {
            "type": "end",
            "id": self.id,
            "outcome": _outcome_dict(self.game.outcome),
            "rounds_used": self.game.rounds_used,
            "bound": self.game.cfg.bound,
        }

    # -- bookkeeping -------------------------------------------------------

    def broadcast(self, message: dict) -> None:
        for q in self.subscribers:
            q.put_nowait(message)

    def append_transcript(self, record: dict) -> None:
        if self.transcript_path is None:
            return
        with self.transcript_path.open("a") as fh:
            fh.write(json.dumps(record, separators=(",", ":"), sort_keys=True) + "\n")


class SessionService:
    def __init__(self, transcript_dir: Optional[Path]) -> None:
        self.sessions: dict[str, Session] = {}
        self.transcript_dir = transcript_dir
        if transcript_dir is not None:
            transcript_dir.mkdir(parents=True, exist_ok=True)

    def create(self, req: NewGameRequest) -> Session:
        try:
            goal = GoalKind(req.goal)
        except ValueError as exc:
            raise InvalidConfig(f"unknown goal {req.goal!r}") from exc
        if req.builder is not None and req.builder != req.goal:
            raise InvalidConfig(
                f"builder {req.builder!r} does not serve goal {req.goal!r}"
            )
        cfg = GameConfig.for_goal(req.k, req.n, goal)
        sid = uuid.uuid4().hex[:12]
        path = self.transcript_dir / f"{sid}.jsonl" if self.transcript_dir else None
        session = Session(sid, Game(builder_for(cfg), cfg), path)
        self.sessions[sid] = session
        session.append_transcript(
            {"type": "new_game", "id": sid, "config": _config_dict(cfg)}
        )
        return session

    def get(self, sid: str) -> Session:
        try:
            return self.sessions[sid]
        except KeyError:
            raise UnknownSession(f"no session {sid!r}") from None

    def submit_color(self, session: Session, req: ColorRequest) -> dict:
        """Advance one round; returns the move or end message. No mutation on error."""
        game = session.game
        if game.outcome is not None:
            raise SessionFinished(f"session {session.id} is over")
        proposed = game.proposed
        assert proposed is not None
        try:
            edge = Edge(req.edge[0], req.edge[1])
            color = Color(req.color)
        except ValueError as exc:
            raise WrongEdge(str(exc)) from exc
        if edge != proposed:
            raise WrongEdge(f"proposed edge is [{proposed.u},{proposed.v}], got [{edge.u},{edge.v}]")
        game.submit(color)
        last = game.rounds[-1]
        session.append_transcript(
            {"type": "color", "i": last.index, "edge": [last.edge.u, last.edge.v],
             "color": last.color.value, "by": last.by}
        )
        session.broadcast(
            {"type": "color", "id": session.id, "i": last.index,
             "edge": [last.edge.u, last.edge.v], "color": last.color.value}
        )
        if game.outcome is not None:
            message = session.end_message()
            session.append_transcript({"type": "end", "outcome": _outcome_dict(game.outcome)})
        else:
            message = session.move_message()
        session.broadcast(message)
        return message


def _error_response(exc: ServiceError) -> JSONResponse:
    return JSONResponse({"error": exc.code, "detail": str(exc)}, status_code=exc.status)


def create_app(transcript_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="online-ramsey sessions")
    svc = SessionService(Path(transcript_dir) if transcript_dir else None)
    app.state.svc = svc

    @app.exception_handler(ServiceError)
    async def _on_service_error(_req, exc: ServiceError):
        return _error_response(exc)

    @app.exception_handler(InvalidConfig)
    async def _on_invalid_config(_req, exc: InvalidConfig):
        return JSONResponse({"error": "InvalidConfig", "detail": str(exc)}, status_code=400)

    @app.get("/builders")
    async def builders() -> dict:
        return {"builders": advertised_builders()}

    @app.post("/games")
    async def create_game(req: NewGameRequest) -> dict:
        session = svc.create(req)
        return {"type": "new_game", "id": session.id, "state": session.snapshot()}

    @app.get("/games/{sid}")
    async def get_state(sid: str) -> dict:
        return svc.get(sid).snapshot()

    @app.post("/games/{sid}/color")
    async def submit_color(sid: str, req: ColorRequest) -> dict:
        return svc.submit_color(svc.get(sid), req)

    @app.websocket("/games/{sid}/events")
    async def events(ws: WebSocket, sid: str) -> None:
        session = svc.sessions.get(sid)
        if session is None:
            await ws.close(code=4404)
            return
        await ws.accept()
        queue: asyncio.Queue = asyncio.Queue()
        session.subscribers.append(queue)
        await ws.send_json(session.snapshot())
        recv = asyncio.ensure_future(ws.receive_json())
        push = asyncio.ensure_future(queue.get())
        try:
            while True:
                done, _ = await asyncio.wait({recv, push}, return_when=asyncio.FIRST_COMPLETED)
                if push in done:
                    await ws.send_json(push.result())
                    push = asyncio.ensure_future(queue.get())
                if recv in done:
                    msg = recv.result()  # raises on disconnect
                    await _handle_ws_message(ws, svc, session, msg)
                    recv = asyncio.ensure_future(ws.receive_json())
        except (WebSocketDisconnect, RuntimeError, ValueError):
            pass
        finally:
            recv.cancel()
            push.cancel()
            session.subscribers.remove(queue)

    async def _handle_ws_message(ws: WebSocket, svc: SessionService, session: Session, msg) -> None:
        if not isinstance(msg, dict) or msg.get("type") != "color":
            await ws.send_json({"type": "error", "error": "BadMessage", "detail": "expected a color message"})
            return
        try:
            req = ColorRequest(edge=msg.get("edge", []), color=msg.get("color", ""))
            svc.submit_color(session, req)
            # The resulting color and move/end events arrive via the queue.
        except ServiceError as exc:
            await ws.send_json({"type": "error", "error": exc.code, "detail": str(exc)})
        except Exception as exc:  # pydantic validation
            await ws.send_json({"type": "error", "error": "BadMessage", "detail": str(exc)})

    return app


app = create_app(os.environ.get("RAMSEY_TRANSCRIPT_DIR"))
