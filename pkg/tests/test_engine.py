import math

import pytest

from planetx.config import MatchConfig
from planetx.engine import (
    DECLINE,
    GameEngine,
    REASON_BOTH_DECLINED,
    REASON_CLOSEST_OUTSIDE_THRESHOLD,
    REASON_NETWORK_DECISION,
    REASON_COIN_FLIP,
    REASON_SOLE_BIDDER,
    STATUS_PENDING,
)
from planetx.errors import (
    AuthError,
    LateBidError,
    NotFoundError,
    StateError,
    ValidationError,
)
from planetx.matchgen import generate_match

from conftest import force_truth


def finish(engine):
    while not engine.finished:
        engine.step()
    return engine


def test_init_state(small_engine):
    e = small_engine
    assert e.tick == 0
    assert e.scores == {"alpha": 0.0, "beta": 0.0}
    assert all(e.status_of(r) == STATUS_PENDING for r in range(e.match.num_robots))
    assert e.events[0]["type"] == "match_started"


def test_init_rejects_duplicate_teams(small_match):
    with pytest.raises(ValidationError):
        GameEngine(small_match, "same", "same", engine_seed=1)


def test_init_twice_same_seed_identical_digests(small_match):
    a = GameEngine(small_match, "alpha", "beta", engine_seed=5)
    b = GameEngine(small_match, "alpha", "beta", engine_seed=5)
    assert a.state_digest() == b.state_digest()


def test_bid_replaces_prior_bid(small_engine):
    small_engine.submit_bid("alpha", 0, 50)
    small_engine.submit_bid("alpha", 0, 60)
    assert small_engine.bids["alpha"][0] == 60


def test_bid_validation(small_engine):
    with pytest.raises(ValidationError):
        small_engine.submit_bid("alpha", 0, 101)
    with pytest.raises(ValidationError):
        small_engine.submit_bid("alpha", 0, -2)
    with pytest.raises(ValidationError):
        small_engine.submit_bid("alpha", 0, True)
    with pytest.raises(NotFoundError):
        small_engine.submit_bid("alpha", 999, 50)
    with pytest.raises(AuthError):
        small_engine.submit_bid("gamma", 0, 50)
    small_engine.submit_bid("alpha", 0, DECLINE)  # decline is always a legal guess


def test_bid_on_resolved_robot_is_late(small_match):
    engine = GameEngine(small_match, "alpha", "beta", engine_seed=4)
    first_exp = min(r.expiration_tick for r in small_match.robots)
    victim = min(r.id for r in small_match.robots if r.expiration_tick == first_exp)
    while engine.tick < first_exp:
        engine.step()
    with pytest.raises(LateBidError):
        engine.submit_bid("alpha", victim, 50)


def test_interest_validation(small_engine):
    small_engine.submit_interests("alpha", [1, 2], ["drive_torque"])
    assert small_engine.interests["alpha"].robot_ids == (1, 2)
    small_engine.submit_interests("alpha", [], [])
    assert small_engine.interests["alpha"].robot_ids == ()
    with pytest.raises(ValidationError):
        small_engine.submit_interests("alpha", [], ["flux_capacitor"])
    with pytest.raises(ValidationError):
        small_engine.submit_interests("alpha", [999], [])


def test_step_resolves_exactly_at_expiration(small_match):
    engine = GameEngine(small_match, "alpha", "beta", engine_seed=4)
    robot = small_match.robots[0]
    for events in (engine.step() for _ in range(robot.expiration_tick)):
        resolved = [e for e in events if e["type"] == "robot_resolved"
                    and e["robot_id"] == robot.id]
        if engine.tick < robot.expiration_tick:
            assert resolved == []
        if engine.tick == robot.expiration_tick:
            assert len(resolved) == 1


def test_match_ends_exactly_once(small_match):
    engine = GameEngine(small_match, "alpha", "beta", engine_seed=4)
    ended = 0
    for _ in range(small_match.config.num_ticks):
        ended += sum(1 for e in engine.step() if e["type"] == "match_ended")
    assert ended == 1
    assert engine.finished
    with pytest.raises(StateError):
        engine.step()
    with pytest.raises(StateError):
        engine.submit_bid("alpha", 0, 50)


def test_conservation_and_score_exactness(small_match):
    engine = GameEngine(small_match, "alpha", "beta", engine_seed=123)
    engine.submit_bid("alpha", 0, 50)
    engine.submit_bid("beta", 1, 50)
    finish(engine)
    n = small_match.num_robots
    assert len(engine.owner) + len(engine.powered_down) == n
    for team in ("alpha", "beta"):
        independent = math.fsum(
            r.productivity for r in small_match.robots
            if engine.owner.get(r.id) == team
        )
        assert engine.scores[team] == independent


def test_worked_example_through_the_engine():
    match = generate_match(MatchConfig(seed=42))
    force_truth(match, 87, 60, 92)

    def run(bid_a, bid_b):
        engine = GameEngine(match, "a_team", "b_team", engine_seed=7)
        if bid_a is not None:
            engine.submit_bid("a_team", 87, bid_a)
        if bid_b is not None:
            engine.submit_bid("b_team", 87, bid_b)
        while engine.tick < 60:
            engine.step()
        return next(e for e in engine.events
                    if e["type"] == "robot_resolved" and e["robot_id"] == 87)

    out = run(91, DECLINE)
    assert out["winner"] == "a_team" and out["reason"] == REASON_SOLE_BIDDER
    assert out["truth"] == 92

    out = run(91, 85)  # both within 10 -> the network decides
    assert out["reason"] in (REASON_NETWORK_DECISION, REASON_COIN_FLIP)

    out = run(91, 60)  # opponent is 32 away
    assert out["winner"] == "a_team"
    assert out["reason"] == REASON_CLOSEST_OUTSIDE_THRESHOLD

    out = run(DECLINE, DECLINE)
    assert out["winner"] is None and out["reason"] == REASON_BOTH_DECLINED
    out = run(None, None)  # missing bids count as declines
    assert out["winner"] is None and out["reason"] == REASON_BOTH_DECLINED


def test_resolve_guards(small_engine):
    robot = small_engine.match.robots[0]
    with pytest.raises(StateError):
        small_engine.resolve(robot.id)  # not its expiration tick yet


def test_snapshot_privacy_and_reveal(small_match):
    engine = GameEngine(small_match, "alpha", "beta", engine_seed=3)
    engine.submit_bid("alpha", 0, 40)
    engine.submit_interests("beta", [2], [])

    snap_a = engine.public_snapshot("alpha")
    snap_b = engine.public_snapshot("beta")
    public = engine.public_snapshot()

    assert snap_a["you"]["bids"] == {"0": 40}
    assert snap_b["you"]["bids"] == {}
    assert snap_b["you"]["interests"]["robot_ids"] == [2]
    assert "you" not in public
    # No productivity is visible before anything resolves.
    assert all(r["productivity"] is None for r in snap_a["robots"])

    finish(engine)
    snap_end = engine.public_snapshot("alpha")
    assert all(r["productivity"] is not None for r in snap_end["robots"])
    for robot, record in zip(snap_end["robots"], small_match.robots):
        assert robot["productivity"] == record.productivity

    with pytest.raises(AuthError):
        engine.public_snapshot("gamma")


def test_drop_privacy(small_match):
    engine = GameEngine(small_match, "alpha", "beta", engine_seed=3)
    engine.step()
    drops_a = engine.drops_for("alpha")
    drops_b = engine.drops_for("beta")
    assert all(d["team"] == "alpha" for d in drops_a)
    assert all(d["team"] == "beta" for d in drops_b)
    assert engine.drops_for("alpha", since=engine.tick) == []


def test_deterministic_event_order(small_match):
    runs = []
    for _ in range(2):
        engine = GameEngine(small_match, "beta", "alpha", engine_seed=17)
        engine.submit_bid("beta", 3, 10)
        finish(engine)
        runs.append(engine.events)
    assert runs[0] == runs[1]
    # Within a tick: drops in team-name order, resolutions by robot id.
    per_tick_teams = [e["team"] for e in runs[0] if e["type"] == "drop_delivered"]
    assert per_tick_teams[:2] == ["alpha", "beta"]
