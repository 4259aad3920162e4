import pytest
from fastapi.testclient import TestClient

from planetx.config import MatchConfig
from planetx.matchgen import generate_match, save_match
from planetx.server import SessionRegistry, create_app

ADMIN = {"x-admin-secret": "hunter2"}


@pytest.fixture(scope="module")
def match_dir(tmp_path_factory):
    directory = tmp_path_factory.mktemp("match")
    match = generate_match(MatchConfig(seed=5, num_robots=20, num_ticks=30,
                                       expiration_window=(5, 29)))
    save_match(match, directory)
    return directory


@pytest.fixture()
def client(match_dir, tmp_path):
    registry = SessionRegistry(log_dir=tmp_path / "logs")
    app = create_app(registry, admin_secret="hunter2")
    return TestClient(app)


def start_match(client, match_dir, mode="manual", **extra):
    created = client.post("/matches", headers=ADMIN,
                          json={"match_dir": str(match_dir), "mode": mode,
                                "engine_seed": 12345, **extra}).json()
    match_id = created["match_id"]
    tok_a = client.post(f"/matches/{match_id}/join", json={"team": "red"}).json()["token"]
    tok_b = client.post(f"/matches/{match_id}/join", json={"team": "blue"}).json()["token"]
    assert client.post(f"/matches/{match_id}/start", headers=ADMIN).status_code == 200
    return match_id, {"red": tok_a, "blue": tok_b}


def auth(token):
    return {"authorization": f"Bearer {token}"}


def test_join_start_flow(client, match_dir):
    match_id, tokens = start_match(client, match_dir)
    snap = client.get(f"/matches/{match_id}/public").json()
    assert snap["session_status"] == "running"
    assert snap["tick"] == 0
    assert sorted(snap["teams"]) == ["blue", "red"]
    assert len(tokens["red"]) >= 32  # >= 128 bits of url-safe entropy


def test_admin_secret_required(client, match_dir):
    assert client.post("/matches", json={"match_dir": str(match_dir)}).status_code == 401
    assert client.post("/matches", headers={"x-admin-secret": "wrong"},
                       json={"match_dir": str(match_dir)}).status_code == 401


def test_third_team_rejected(client, match_dir):
    match_id, _ = start_match(client, match_dir)
    resp = client.post(f"/matches/{match_id}/join", json={"team": "green"})
    assert resp.status_code == 409


def test_duplicate_team_rejected(client, match_dir):
    created = client.post("/matches", headers=ADMIN,
                          json={"match_dir": str(match_dir)}).json()
    match_id = created["match_id"]
    client.post(f"/matches/{match_id}/join", json={"team": "red"})
    assert client.post(f"/matches/{match_id}/join", json={"team": "red"}).status_code == 409


def test_unknown_match_404(client):
    assert client.get("/matches/nope/public").status_code == 404
    assert client.post("/matches/nope/join", json={"team": "x"}).status_code == 404


def test_bad_token_401(client, match_dir):
    match_id, _ = start_match(client, match_dir)
    resp = client.post(f"/matches/{match_id}/bid", headers=auth("bogus"),
                       json={"robot_id": 0, "guess": 50})
    assert resp.status_code == 401
    resp = client.post(f"/matches/{match_id}/bid", json={"robot_id": 0, "guess": 50})
    assert resp.status_code == 401


def test_bid_flow_and_errors(client, match_dir):
    match_id, tokens = start_match(client, match_dir)
    ok = client.post(f"/matches/{match_id}/bid", headers=auth(tokens["red"]),
                     json={"robot_id": 0, "guess": 77})
    assert ok.status_code == 200
    assert ok.json()["tick"] == 0

    bad_range = client.post(f"/matches/{match_id}/bid", headers=auth(tokens["red"]),
                            json={"robot_id": 0, "guess": 101})
    assert bad_range.status_code == 422

    unknown = client.post(f"/matches/{match_id}/bid", headers=auth(tokens["red"]),
                          json={"robot_id": 999, "guess": 50})
    assert unknown.status_code == 404

    malformed = client.post(f"/matches/{match_id}/bid", headers=auth(tokens["red"]),
                            json={"robot_id": "zero"})
    assert malformed.status_code == 422


def test_late_bid_409(client, match_dir):
    match_id, tokens = start_match(client, match_dir)
    snap = client.get(f"/matches/{match_id}/public").json()
    first = min(snap["robots"], key=lambda r: r["expiration_tick"])
    # Bid one tick before expiry is fine; at expiry it is late.
    for _ in range(first["expiration_tick"] - 1):
        client.post(f"/matches/{match_id}/step", headers=ADMIN)
    early = client.post(f"/matches/{match_id}/bid", headers=auth(tokens["red"]),
                        json={"robot_id": first["id"], "guess": 50})
    assert early.status_code == 200
    client.post(f"/matches/{match_id}/step", headers=ADMIN)
    late = client.post(f"/matches/{match_id}/bid", headers=auth(tokens["blue"]),
                       json={"robot_id": first["id"], "guess": 50})
    assert late.status_code == 409


def test_snapshot_scoping(client, match_dir):
    match_id, tokens = start_match(client, match_dir)
    client.post(f"/matches/{match_id}/bid", headers=auth(tokens["red"]),
                json={"robot_id": 1, "guess": 30})
    mine = client.get(f"/matches/{match_id}/public", headers=auth(tokens["red"])).json()
    theirs = client.get(f"/matches/{match_id}/public", headers=auth(tokens["blue"])).json()
    anon = client.get(f"/matches/{match_id}/public").json()
    assert mine["you"]["bids"] == {"1": 30}
    assert theirs["you"]["bids"] == {}
    assert "you" not in anon


def test_drops_cursor(client, match_dir):
    match_id, tokens = start_match(client, match_dir)
    for _ in range(3):
        client.post(f"/matches/{match_id}/step", headers=ADMIN)
    got = client.get(f"/matches/{match_id}/drops", headers=auth(tokens["red"])).json()
    assert [d["tick"] for d in got["drops"]] == [1, 2, 3]
    assert got["cursor"] == 3
    again = client.get(f"/matches/{match_id}/drops?since=3",
                       headers=auth(tokens["red"])).json()
    assert again["drops"] == []
    partial = client.get(f"/matches/{match_id}/drops?since=1",
                         headers=auth(tokens["red"])).json()
    assert [d["tick"] for d in partial["drops"]] == [2, 3]


def test_interests_roundtrip(client, match_dir):
    match_id, tokens = start_match(client, match_dir)
    resp = client.post(f"/matches/{match_id}/interests", headers=auth(tokens["blue"]),
                       json={"robot_ids": [3, 4, 5], "part_names": ["optic_gain", "plating"]})
    assert resp.status_code == 200
    echo = resp.json()
    assert echo["robot_ids"] == [3, 4, 5]
    assert echo["part_names"] == ["optic_gain", "plating"]
    bad = client.post(f"/matches/{match_id}/interests", headers=auth(tokens["blue"]),
                      json={"part_names": ["flux_capacitor"]})
    assert bad.status_code == 422


def test_step_finishes_match_and_log_route(client, match_dir):
    match_id, tokens = start_match(client, match_dir)
    locked_before = client.get(f"/matches/{match_id}/log", headers=ADMIN)
    assert locked_before.status_code == 409
    for _ in range(30):
        client.post(f"/matches/{match_id}/step", headers=ADMIN)
    snap = client.get(f"/matches/{match_id}/public").json()
    assert snap["session_status"] == "finished"
    # Finished match rejects further commands.
    assert client.post(f"/matches/{match_id}/step", headers=ADMIN).status_code == 409
    assert client.post(f"/matches/{match_id}/bid", headers=auth(tokens["red"]),
                       json={"robot_id": 0, "guess": 1}).status_code == 409
    log = client.get(f"/matches/{match_id}/log", headers=ADMIN)
    assert log.status_code == 200
    body = log.json()
    assert body["events"][0]["type"] == "match_started"
    assert body["events"][-1]["type"] == "match_ended"
    assert len(body["hash"]) == 64


def test_concurrent_matches_are_independent(client, match_dir):
    id_one, tok_one = start_match(client, match_dir)
    id_two, tok_two = start_match(client, match_dir)
    client.post(f"/matches/{id_one}/step", headers=ADMIN)
    client.post(f"/matches/{id_one}/bid", headers=auth(tok_one["red"]),
                json={"robot_id": 2, "guess": 60})
    snap_one = client.get(f"/matches/{id_one}/public").json()
    snap_two = client.get(f"/matches/{id_two}/public").json()
    assert snap_one["tick"] == 1
    assert snap_two["tick"] == 0
    # Tokens are per-match.
    crossed = client.post(f"/matches/{id_two}/bid", headers=auth(tok_one["red"]),
                          json={"robot_id": 2, "guess": 60})
    assert crossed.status_code == 401


def test_start_requires_two_teams(client, match_dir):
    created = client.post("/matches", headers=ADMIN,
                          json={"match_dir": str(match_dir)}).json()
    match_id = created["match_id"]
    assert client.post(f"/matches/{match_id}/start", headers=ADMIN).status_code == 409
    client.post(f"/matches/{match_id}/join", json={"team": "solo"})
    assert client.post(f"/matches/{match_id}/start", headers=ADMIN).status_code == 409


def test_missing_match_dir_rejected(client, tmp_path):
    resp = client.post("/matches", headers=ADMIN,
                       json={"match_dir": str(tmp_path / "nowhere")})
    assert resp.status_code == 400


def test_rejoin_after_start_reissues_token(client, match_dir):
    match_id, tokens = start_match(client, match_dir)
    rejoin = client.post(f"/matches/{match_id}/join", json={"team": "red"})
    assert rejoin.status_code == 200
    fresh = rejoin.json()["token"]
    assert fresh != tokens["red"]
    resp = client.post(f"/matches/{match_id}/bid", headers=auth(fresh),
                       json={"robot_id": 0, "guess": 10})
    assert resp.status_code == 200


def test_resume_from_persisted_log(match_dir, tmp_path):
    from planetx.server import SessionRegistry

    def drive(session, upto):
        session.join("red")
        session.join("blue")
        session.start()
        session.submit_bid("red", 0, 42)
        for _ in range(upto):
            session.step_manual()

    # Uninterrupted control run.
    control_reg = SessionRegistry(log_dir=tmp_path / "control")
    control = control_reg.create(match_dir, mode="manual", engine_seed=777)
    drive(control, 30)
    assert control.status == "finished"

    # Interrupted run: stop mid-match, resume from the persisted log.
    first_reg = SessionRegistry(log_dir=tmp_path / "first")
    first = first_reg.create(match_dir, mode="manual", engine_seed=777)
    drive(first, 12)
    first_reg.stop_all()
    assert first.status == "finished"  # session closed, log persisted

    second_reg = SessionRegistry(log_dir=tmp_path / "second")
    resumed = second_reg.create(match_dir, mode="manual",
                                resume_log=first.log_path)
    assert resumed.engine.tick == 12
    resumed.join("red")  # recorded teams re-admit for fresh tokens
    resumed.start()
    while resumed.status != "finished":
        resumed.step_manual()

    assert resumed.engine.scores == control.engine.scores
    assert resumed.engine.events == control.engine.events
