"""Local HTTP session API: one game per session, snapshots over JSON.

The browser client drives the simulation through this API; the snapshot
schema in ``outbreak.snapshot`` is the only payload format.  Sessions live
in process memory and are discarded on restart.  Needs the ``server``
extra (fastapi + uvicorn).
"""

from __future__ import annotations

import threading
import uuid
from typing import Any

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from outbreak.cli import bundled_config_path, bundled_map_path
from outbreak.config import load_config
from outbreak.engine import Command, GameState, new_game, step
from outbreak.snapshot import to_snapshot
from outbreak.worldmap import load_map

_BUNDLED_MAPS = {"city": bundled_map_path}


class NewSessionRequest(BaseModel):
    map: str = "city"
    seed: int = 0


class StepRequest(BaseModel):
    command: str


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="outbreak session API")
    sessions: dict[str, GameState] = {}
    lock = threading.Lock()
    cfg = load_config(bundled_config_path())

    @app.get("/api/maps")
    def list_maps() -> dict[str, Any]:
        return {"maps": sorted(_BUNDLED_MAPS)}

    @app.post("/api/session")
    def new_session(req: NewSessionRequest) -> dict[str, Any]:
        path_fn = _BUNDLED_MAPS.get(req.map)
        if path_fn is None:
            raise HTTPException(status_code=404, detail=f"unknown map {req.map!r}")
        world = load_map(path_fn())
        state = new_game(world, cfg, req.seed)
        sid = uuid.uuid4().hex
        with lock:
            sessions[sid] = state
        return {"session": sid, "snapshot": to_snapshot(state)}

    @app.get("/api/session/{sid}")
    def get_session(sid: str) -> dict[str, Any]:
        with lock:
            state = sessions.get(sid)
        if state is None:
            raise HTTPException(status_code=404, detail="no such session")
        return {"snapshot": to_snapshot(state)}

    @app.post("/api/session/{sid}/step")
    def step_session(sid: str, req: StepRequest) -> dict[str, Any]:
        try:
            command = Command.from_char(req.command)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        with lock:
            state = sessions.get(sid)
            if state is None:
                raise HTTPException(status_code=404, detail="no such session")
            state = step(state, command)
            sessions[sid] = state
        return {"snapshot": to_snapshot(state)}

    @app.delete("/api/session/{sid}")
    def end_session(sid: str) -> dict[str, Any]:
        with lock:
            sessions.pop(sid, None)
        return {"ok": True}

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")
    return app
