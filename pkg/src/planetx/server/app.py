"""JSON HTTP API over the engine.

Team routes authenticate with the bearer token issued at join time; admin
routes require the server-start secret.  Every state-mutating request is
applied under the session lock and acknowledged with the tick at which it
took effect.
"""

import hmac

from fastapi import FastAPI, Header, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from ..errors import (
    AuthError,
    IntegrityError,
    LateBidError,
    MatchIOError,
    NotFoundError,
    PlanetXError,
    StateError,
    ValidationError,
)
from .sessions import MODE_MANUAL, SessionRegistry

_STATUS_CODES = (
    (AuthError, 401),
    (NotFoundError, 404),
    (LateBidError, 409),
    (StateError, 409),
    (IntegrityError, 409),
    (ValidationError, 422),
    (MatchIOError, 400),
)


class CreateMatchBody(BaseModel):
    match_dir: str
    mode: str = MODE_MANUAL
    tick_seconds: "float | None" = None
    engine_seed: "int | None" = None
    resume_log: "str | None" = None


class JoinBody(BaseModel):
    team: str = Field(min_length=1, max_length=64)


class BidBody(BaseModel):
    robot_id: int
    guess: int  # -1 declines


class InterestsBody(BaseModel):
    robot_ids: "list[int]" = Field(default_factory=list)
    part_names: "list[str]" = Field(default_factory=list)


def create_app(registry: SessionRegistry, admin_secret: str) -> FastAPI:
    app = FastAPI(title="planetx match server")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.registry = registry

    def check_admin(secret: "str | None") -> None:
        if not secret or not hmac.compare_digest(secret, admin_secret):
            raise AuthError("admin secret required")

    def bearer(authorization: "str | None", token: "str | None" = None) -> str:
        if authorization and authorization.lower().startswith("bearer "):
            return authorization[7:].strip()
        if token:
            return token
        raise AuthError("missing bearer token")

    @app.exception_handler(PlanetXError)
    async def planetx_error(request: Request, exc: PlanetXError):
        for err_type, code in _STATUS_CODES:
            if isinstance(exc, err_type):
                return JSONResponse(status_code=code, content={"error": str(exc)})
        return JSONResponse(status_code=500, content={"error": str(exc)})

    @app.post("/matches")
    def create_match(body: CreateMatchBody,
                     x_admin_secret: "str | None" = Header(default=None)):
        check_admin(x_admin_secret)
        session = registry.create(
            match_dir=body.match_dir,
            mode=body.mode,
            tick_seconds=body.tick_seconds,
            engine_seed=body.engine_seed,
            resume_log=body.resume_log,
        )
        return {
            "match_id": session.match_id,
            "mode": session.mode,
            "status": session.status,
            "tick_seconds": session.tick_seconds,
            "log_path": str(session.log_path),
        }

    @app.post("/matches/{match_id}/join")
    def join(match_id: str, body: JoinBody):
        session = registry.get(match_id)
        token = session.join(body.team)
        return {"match_id": match_id, "team": body.team, "token": token}

    @app.post("/matches/{match_id}/start")
    def start(match_id: str, x_admin_secret: "str | None" = Header(default=None)):
        check_admin(x_admin_secret)
        session = registry.get(match_id)
        session.start()
        return {"match_id": match_id, "status": session.status}

    @app.post("/matches/{match_id}/step")
    def step(match_id: str, x_admin_secret: "str | None" = Header(default=None)):
        check_admin(x_admin_secret)
        session = registry.get(match_id)
        result = session.step_manual()
        return {"match_id": match_id, **result, "status": session.status}

    @app.get("/matches/{match_id}/public")
    def public(match_id: str,
               authorization: "str | None" = Header(default=None),
               token: "str | None" = Query(default=None)):
        session = registry.get(match_id)
        team = None
        if authorization or token:
            team = session.team_for(bearer(authorization, token))
        return session.snapshot(team)

    @app.post("/matches/{match_id}/bid")
    def bid(match_id: str, body: BidBody,
            authorization: "str | None" = Header(default=None)):
        session = registry.get(match_id)
        team = session.team_for(bearer(authorization))
        ack = session.submit_bid(team, body.robot_id, body.guess)
        return {"match_id": match_id, "team": team, "accepted": True, **ack}

    @app.post("/matches/{match_id}/interests")
    def interests(match_id: str, body: InterestsBody,
                  authorization: "str | None" = Header(default=None)):
        session = registry.get(match_id)
        team = session.team_for(bearer(authorization))
        ack = session.submit_interests(team, body.robot_ids, body.part_names)
        return {"match_id": match_id, "team": team, "accepted": True, **ack}

    @app.get("/matches/{match_id}/drops")
    def drops(match_id: str, since: int = Query(default=-1),
              authorization: "str | None" = Header(default=None),
              token: "str | None" = Query(default=None)):
        session = registry.get(match_id)
        team = session.team_for(bearer(authorization, token))
        items = session.drops_since(team, since)
        cursor = max((d["tick"] for d in items), default=since)
        return {"match_id": match_id, "team": team, "drops": items, "cursor": cursor}

    @app.get("/matches/{match_id}/log")
    def log(match_id: str, x_admin_secret: "str | None" = Header(default=None)):
        check_admin(x_admin_secret)
        session = registry.get(match_id)
        return session.log_events()

    return app
