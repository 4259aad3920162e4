"""Replay: rebuild an engine from a recorded event stream.

Only command events are fed back in (bids, interest updates, tick
advances); the engine regenerates everything else.  If the match files and
engine seed are the same, the regenerated log is identical to the recorded
one, hash included.
"""

from dataclasses import dataclass

from ..errors import IntegrityError, MatchIOError
from . import events as ev
from .engine import GameEngine


def resume_engine(match, recorded_events) -> GameEngine:
    """Re-simulate a (possibly partial) event stream against match data."""
    if not recorded_events or recorded_events[0].get("type") != ev.MATCH_STARTED:
        raise MatchIOError("event stream does not begin with match_started")
    started = recorded_events[0]
    teams = started["teams"]
    if len(teams) != 2:
        raise MatchIOError(f"expected 2 teams in match_started, got {teams!r}")

    engine = GameEngine(match, teams[0], teams[1], started["engine_seed"],
                        match_dir=started.get("match_dir"))
    if engine.match_digest != started.get("match_hash"):
        raise IntegrityError(
            f"match files do not match the log: log recorded "
            f"{str(started.get('match_hash'))[:12]}..., directory hashes to "
            f"{engine.match_digest[:12]}...")

    for event in recorded_events[1:]:
        kind = event.get("type")
        if kind == ev.BID_SUBMITTED:
            engine.submit_bid(event["team"], event["robot_id"], event["guess"])
        elif kind == ev.INTERESTS_UPDATED:
            engine.submit_interests(event["team"], event["robot_ids"], event["part_names"])
        elif kind == ev.TICK_ADVANCED:
            engine.step()
    return engine


@dataclass(frozen=True)
class ReplayReport:
    ok: bool
    recorded_hash: "str | None"
    computed_hash: str
    scores: dict
    detail: str


def verify_log(match, recorded_events, recorded_hash) -> ReplayReport:
    """Re-simulate and compare against the recorded log, hash and all."""
    engine = resume_engine(match, recorded_events)
    computed = ev.log_hash(engine.events)
    recorded_recomputed = ev.log_hash(recorded_events)

    if recorded_hash is not None and recorded_recomputed != recorded_hash:
        detail = "log file was modified: its events no longer match its hash line"
        ok = False
    elif engine.events != recorded_events:
        detail = "re-simulation diverged from the recorded events"
        ok = False
    elif recorded_hash is not None and computed != recorded_hash:
        detail = "re-simulated log hash does not match the recorded hash"
        ok = False
    else:
        detail = "replay reproduced the recorded log exactly"
        ok = True
    return ReplayReport(
        ok=ok,
        recorded_hash=recorded_hash,
        computed_hash=computed,
        scores=dict(sorted(engine.scores.items())),
        detail=detail,
    )
