"""Bot execution: in-process headless matches and the HTTP client loop."""

import time
from dataclasses import dataclass
import random

import httpx

from ..engine import GameEngine
from ..errors import PlanetXError, ValidationError
from .policies import BidCommand, BotView, InterestCommand


@dataclass
class HeadlessResult:
    scores: dict
    winner: "str | None"
    events: list
    invalid_commands: dict
    engine: GameEngine


def _apply(engine, team, commands, invalid_counts) -> None:
    for command in commands:
        try:
            if isinstance(command, BidCommand):
                engine.submit_bid(team, command.robot_id, command.guess)
            elif isinstance(command, InterestCommand):
                engine.submit_interests(team, list(command.robot_ids),
                                        list(command.part_names))
            else:
                raise ValidationError(f"unknown command {command!r}")
        except PlanetXError:
            invalid_counts[team] += 1  # invalid commands are dropped, counted


def run_headless(match, policy_a, policy_b, *, team_a="bot_a", team_b="bot_b",
                 engine_seed=0, seed_a=1, seed_b=2, match_dir=None) -> HeadlessResult:
    """Run a complete match in-process: poll, act, step, repeat."""
    engine = GameEngine(match, team_a, team_b, engine_seed=engine_seed,
                        match_dir=match_dir)
    bots = [
        (team_a, policy_a, random.Random(seed_a)),
        (team_b, policy_b, random.Random(seed_b)),
    ]
    invalid = {team_a: 0, team_b: 0}
    while not engine.finished:
        for team, policy, rng in bots:
            view = BotView(engine.public_snapshot(team), engine.drops_for(team))
            _apply(engine, team, policy.act(view, rng), invalid)
        engine.step()

    scores = dict(sorted(engine.scores.items()))
    if scores[team_a] == scores[team_b]:
        winner = None
    else:
        winner = team_a if scores[team_a] > scores[team_b] else team_b
    return HeadlessResult(scores=scores, winner=winner, events=engine.events,
                          invalid_commands=invalid, engine=engine)


class HttpBot:
    """Plays one team over the JSON API: poll snapshot, compute, post commands."""

    def __init__(self, base_url, match_id, team, policy, seed=0, client=None):
        self.client = client or httpx.Client(base_url=base_url, timeout=30.0)
        self.match_id = match_id
        self.team = team
        self.policy = policy
        self.rng = random.Random(seed)
        self.token = None
        self.cursor = -1
        self.drops: list = []
        self.posted = 0
        self.rejected = 0

    def join(self) -> str:
        resp = self.client.post(f"/matches/{self.match_id}/join", json={"team": self.team})
        resp.raise_for_status()
        self.token = resp.json()["token"]
        return self.token

    def _headers(self) -> dict:
        return {"authorization": f"Bearer {self.token}"}

    def poll_once(self) -> dict:
        """One poll-act-post cycle; returns the snapshot seen."""
        snapshot = self.client.get(f"/matches/{self.match_id}/public",
                                   headers=self._headers()).json()
        if snapshot.get("session_status") != "running":
            return snapshot
        got = self.client.get(f"/matches/{self.match_id}/drops",
                              params={"since": self.cursor},
                              headers=self._headers()).json()
        self.drops.extend(got["drops"])
        self.cursor = max(self.cursor, got["cursor"])

        for command in self.policy.act(BotView(snapshot, self.drops), self.rng):
            if isinstance(command, BidCommand):
                resp = self.client.post(
                    f"/matches/{self.match_id}/bid", headers=self._headers(),
                    json={"robot_id": command.robot_id, "guess": command.guess})
            else:
                resp = self.client.post(
                    f"/matches/{self.match_id}/interests", headers=self._headers(),
                    json={"robot_ids": list(command.robot_ids),
                          "part_names": list(command.part_names)})
            if resp.status_code == 200:
                self.posted += 1
            else:
                self.rejected += 1
        return snapshot

    def run(self, poll_interval: "float | None" = None) -> dict:
        """Poll until the match finishes; returns the final snapshot."""
        if self.token is None:
            self.join()
        while True:
            snapshot = self.poll_once()
            if snapshot.get("session_status") == "finished" or snapshot.get("finished"):
                return snapshot
            interval = poll_interval
            if interval is None:
                interval = float(snapshot.get("tick_seconds", 1.0)) / 2
            time.sleep(interval)
