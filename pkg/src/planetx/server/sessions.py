"""Match sessions: engine + tokens + tick scheduling, one lock per match.

Every mutation of a session's engine happens under the session lock, which
serializes commands exactly like a single command queue would.  Distinct
sessions share nothing, so concurrent matches are fully independent.  In
live mode a daemon thread steps the engine on absolute deadlines
(start + k * tick_seconds) so scheduling skew never accumulates.
"""

import secrets
import threading
import time
from pathlib import Path

from ..engine import GameEngine
from ..engine import events as ev
from ..engine.replay import resume_engine
from ..errors import AuthError, NotFoundError, StateError, ValidationError
from ..matchgen import load_match

MODE_LIVE = "live"
MODE_MANUAL = "manual"

STATUS_LOBBY = "lobby"
STATUS_RUNNING = "running"
STATUS_FINISHED = "finished"


class MatchSession:
    def __init__(self, match_id, match, match_dir, mode, tick_seconds, engine_seed, log_path):
        if mode not in (MODE_LIVE, MODE_MANUAL):
            raise ValidationError(f"mode must be '{MODE_LIVE}' or '{MODE_MANUAL}'")
        self.match_id = match_id
        self.match = match
        self.match_dir = str(match_dir)
        self.mode = mode
        self.tick_seconds = tick_seconds if tick_seconds is not None else match.config.tick_seconds
        self.engine_seed = engine_seed
        self.log_path = Path(log_path)
        self.lock = threading.RLock()
        self.status = STATUS_LOBBY
        self.engine: "GameEngine | None" = None
        self.tokens: dict = {}  # token -> team
        self.join_order: list = []
        self._scheduler: "threading.Thread | None" = None

    # ----------------------------------------------------------------- lobby

    def join(self, team: str) -> str:
        with self.lock:
            if self.status == STATUS_FINISHED:
                raise StateError("match is finished")
            if not team or not isinstance(team, str):
                raise ValidationError("team name must be a non-empty string")
            if self.engine is None:
                if team in self.join_order:
                    raise StateError(f"team {team!r} already joined")
                if len(self.join_order) >= 2:
                    raise StateError("both team slots are taken")
                self.join_order.append(team)
            elif team not in self.engine.teams:
                # Started/resumed matches only admit the two recorded teams;
                # those may rejoin for a fresh token (reconnects, resumes).
                raise StateError(f"this match is between {self.engine.teams}")
            token = secrets.token_urlsafe(32)
            self.tokens[token] = team
            return token

    def team_for(self, token: str) -> str:
        with self.lock:
            team = self.tokens.get(token)
            if team is None:
                raise AuthError("invalid or unknown token")
            return team

    def start(self) -> None:
        with self.lock:
            if self.status != STATUS_LOBBY:
                raise StateError(f"cannot start a session in state {self.status!r}")
            if self.engine is None:
                if len(self.join_order) != 2:
                    raise StateError("need exactly two joined teams to start")
                self.engine = GameEngine(
                    self.match, self.join_order[0], self.join_order[1],
                    engine_seed=self.engine_seed, match_dir=self.match_dir,
                )
            self.status = STATUS_RUNNING
            if self.mode == MODE_LIVE:
                self._scheduler = threading.Thread(
                    target=self._run_scheduler, name=f"ticker-{self.match_id}", daemon=True)
                self._scheduler.start()

    # --------------------------------------------------------------- commands

    def submit_bid(self, team, robot_id, guess) -> dict:
        with self.lock:
            self._require_running()
            return self.engine.submit_bid(team, robot_id, guess)

    def submit_interests(self, team, robot_ids, part_names) -> dict:
        with self.lock:
            self._require_running()
            return self.engine.submit_interests(team, robot_ids, part_names)

    def step_manual(self) -> dict:
        with self.lock:
            self._require_running()
            if self.mode != MODE_MANUAL:
                raise StateError("manual stepping is only allowed in manual mode")
            self.engine.step()
            tick = self.engine.tick
            if self.engine.finished:
                self._finalize()
            return {"tick": tick}

    # --------------------------------------------------------------- readouts

    def snapshot(self, team=None) -> dict:
        with self.lock:
            base = {
                "match_id": self.match_id,
                "session_status": self.status,
                "mode": self.mode,
                "tick_seconds": self.tick_seconds,
            }
            if self.engine is None:
                base.update({
                    "tick": 0,
                    "teams": list(self.join_order),
                    "num_ticks": self.match.config.num_ticks,
                })
                return base
            snap = self.engine.public_snapshot(team)
            snap.update(base)
            return snap

    def drops_since(self, team, since) -> list:
        with self.lock:
            self._require_engine()
            return self.engine.drops_for(team, since)

    def log_events(self) -> dict:
        with self.lock:
            self._require_engine()
            if self.status != STATUS_FINISHED:
                raise StateError("log is available once the match is finished")
            return {"events": list(self.engine.events),
                    "hash": ev.log_hash(self.engine.events),
                    "log_path": str(self.log_path)}

    # --------------------------------------------------------------- plumbing

    def stop(self) -> None:
        """Graceful shutdown: persist whatever has happened so far."""
        with self.lock:
            if self.status == STATUS_FINISHED:
                return
            if self.engine is not None:
                self._finalize()
            else:
                self.status = STATUS_FINISHED

    def _require_engine(self) -> None:
        if self.engine is None:
            raise StateError("match has not started")

    def _require_running(self) -> None:
        self._require_engine()
        if self.status != STATUS_RUNNING:
            raise StateError(f"match is {self.status}")

    def _finalize(self) -> None:
        # Persist before flipping status: unlocked readers treat FINISHED as
        # "the log file is on disk".
        ev.write_log(self.engine.events, self.log_path)
        self.status = STATUS_FINISHED

    def _run_scheduler(self) -> None:
        start = time.monotonic()
        k = 0
        while True:
            k += 1
            deadline = start + k * self.tick_seconds
            delay = deadline - time.monotonic()
            if delay > 0:
                time.sleep(delay)
            with self.lock:
                if self.status != STATUS_RUNNING:
                    return
                try:
                    self.engine.step()
                except Exception as exc:  # fault -> aborted, never crashes clients
                    self.engine.abort(repr(exc))
                    self._finalize()
                    return
                if self.engine.finished:
                    self._finalize()
                    return


class SessionRegistry:
    """All live sessions in this server process."""

    def __init__(self, log_dir="match_logs"):
        self.log_dir = Path(log_dir)
        self._lock = threading.Lock()
        self._sessions: dict = {}

    def create(self, match_dir, mode=MODE_MANUAL, tick_seconds=None,
               engine_seed=None, resume_log=None) -> MatchSession:
        match = load_match(match_dir)
        match_id = secrets.token_hex(8)
        if engine_seed is None:
            engine_seed = secrets.randbits(63)
        session = MatchSession(
            match_id=match_id,
            match=match,
            match_dir=match_dir,
            mode=mode,
            tick_seconds=tick_seconds,
            engine_seed=engine_seed,
            log_path=self.log_dir / f"{match_id}.ndjson",
        )
        if resume_log is not None:
            events, _ = ev.read_log(resume_log)
            session.engine = resume_engine(match, events)
            if session.engine.finished:
                session._finalize()
        with self._lock:
            self._sessions[match_id] = session
        return session

    def get(self, match_id: str) -> MatchSession:
        with self._lock:
            session = self._sessions.get(match_id)
        if session is None:
            raise NotFoundError(f"unknown match {match_id!r}")
        return session

    def stop_all(self) -> None:
        with self._lock:
            sessions = list(self._sessions.values())
        for session in sessions:
            session.stop()
