"""The tick-based game engine.

A single-owner state machine: all mutations (bids, interest updates, tick
steps) go through one engine instance, which appends every accepted
mutation and every generated outcome to its event log.  The engine makes
no timing decisions — callers decide when to step.  All residual
randomness (drop sampling, coin flips) comes from a dedicated engine seed
recorded in the log, so any run can be replayed bit-exactly.
"""

import math
import random

from ..canonical import canonical_json, sha256_hex
from ..errors import (
    AuthError,
    LateBidError,
    NotFoundError,
    StateError,
    ValidationError,
)
from ..matchgen.io import match_hash as compute_match_hash
from ..matchgen.parts import PART_NAMES
from . import events as ev
from .hacker import TeamHacker
from .resolution import NEEDS_NETWORK, decide, network_totals
from .state import (
    DECLINE,
    GUESS_MAX,
    GUESS_MIN,
    InterestSet,
    REASON_COIN_FLIP,
    REASON_NETWORK_DECISION,
    STATUS_CLAIMED,
    STATUS_PENDING,
    STATUS_POWERED_DOWN,
)


class GameEngine:
    def __init__(self, match, team_a: str, team_b: str, engine_seed: int,
                 match_digest: "str | None" = None, match_dir: "str | None" = None):
        if team_a == team_b:
            raise ValidationError(f"teams must be distinct, both named {team_a!r}")
        if not team_a or not team_b:
            raise ValidationError("team names must be non-empty")

        self.match = match
        self.cfg = match.config
        self.teams = (team_a, team_b)
        self.engine_seed = int(engine_seed)
        self.rng = random.Random(self.engine_seed)
        self.match_digest = match_digest or compute_match_hash(match)
        self.match_dir = match_dir

        self.tick = 0
        self.owner: dict = {}  # robot_id -> team, once claimed
        self.powered_down: set = set()
        self.bids = {team: {} for team in self.teams}  # robot_id -> guess
        self.interests = {team: InterestSet((), (), 0) for team in self.teams}
        self.hackers = {team: TeamHacker(match) for team in self.teams}
        self.drops = {team: [] for team in self.teams}
        self.scores = {team: 0.0 for team in self.teams}
        self.invalid_commands = {team: 0 for team in self.teams}
        self.aborted = False
        self.events: list = []

        self._static_snapshot = {
            "num_robots": match.num_robots,
            "num_ticks": self.cfg.num_ticks,
            "tick_seconds": self.cfg.tick_seconds,
            "proximity_threshold": self.cfg.proximity_threshold,
            "part_names": list(PART_NAMES),
            "network": match.network.to_dict(),
            "tree": match.tree.to_dict(),
        }

        self._log({
            "type": ev.MATCH_STARTED,
            "tick": 0,
            "teams": list(self.teams),
            "engine_seed": self.engine_seed,
            "match_hash": self.match_digest,
            "match_dir": self.match_dir,
            "num_robots": match.num_robots,
            "num_ticks": self.cfg.num_ticks,
        })

    # ------------------------------------------------------------------ state

    @property
    def finished(self) -> bool:
        return self.tick >= self.cfg.num_ticks

    def status_of(self, robot_id: int) -> str:
        if robot_id in self.owner:
            return STATUS_CLAIMED
        if robot_id in self.powered_down:
            return STATUS_POWERED_DOWN
        return STATUS_PENDING

    def _check_team(self, team: str) -> None:
        if team not in self.teams:
            raise AuthError(f"unknown team {team!r}")

    def _check_robot(self, robot_id) -> None:
        if not isinstance(robot_id, int) or isinstance(robot_id, bool) \
                or not 0 <= robot_id < self.match.num_robots:
            raise NotFoundError(f"unknown robot {robot_id!r}")

    def _log(self, event: dict) -> dict:
        self.events.append(event)
        return event

    # --------------------------------------------------------------- commands

    def submit_bid(self, team: str, robot_id: int, guess: int) -> dict:
        """Place or replace this team's bid; allowed until the expiration tick."""
        self._check_team(team)
        if self.finished:
            raise StateError("match is finished")
        self._check_robot(robot_id)
        if self.status_of(robot_id) != STATUS_PENDING:
            raise LateBidError(f"robot {robot_id} already resolved")
        if self.tick >= self.match.robots[robot_id].expiration_tick:
            raise LateBidError(f"robot {robot_id} expires at tick "
                               f"{self.match.robots[robot_id].expiration_tick}")
        if not isinstance(guess, int) or isinstance(guess, bool) \
                or not (guess == DECLINE or GUESS_MIN <= guess <= GUESS_MAX):
            raise ValidationError(
                f"guess must be {DECLINE} or an integer in [{GUESS_MIN}, {GUESS_MAX}], got {guess!r}")

        self.bids[team][robot_id] = guess
        self._log({
            "type": ev.BID_SUBMITTED,
            "tick": self.tick,
            "team": team,
            "robot_id": robot_id,
            "guess": guess,
        })
        return {"tick": self.tick, "robot_id": robot_id, "guess": guess}

    def submit_interests(self, team: str, robot_ids, part_names) -> dict:
        """Replace the team's interest set; biases drops from the next tick on."""
        self._check_team(team)
        if self.finished:
            raise StateError("match is finished")
        robot_ids = list(robot_ids)
        part_names = list(part_names)
        for rid in robot_ids:
            if not isinstance(rid, int) or isinstance(rid, bool) \
                    or not 0 <= rid < self.match.num_robots:
                raise ValidationError(f"unknown robot {rid!r}")
        for name in part_names:
            if name not in PART_NAMES:
                raise ValidationError(f"unknown part {name!r}")

        self.interests[team] = InterestSet(tuple(robot_ids), tuple(part_names), self.tick)
        self.hackers[team].set_interests(robot_ids, part_names)
        self._log({
            "type": ev.INTERESTS_UPDATED,
            "tick": self.tick,
            "team": team,
            "robot_ids": robot_ids,
            "part_names": part_names,
        })
        return {"tick": self.tick, "robot_ids": robot_ids, "part_names": part_names}

    # ------------------------------------------------------------------ steps

    def step(self) -> list:
        """Advance one tick: deliver drops, resolve expiring robots.

        Returns the events generated by this step, in log order: drops in
        team-name order, resolutions in robot-id order, then match end.
        """
        if self.finished:
            raise StateError("match is finished")
        self.tick += 1
        produced = [self._log({"type": ev.TICK_ADVANCED, "tick": self.tick})]

        for team in sorted(self.teams):
            series_items, part_items = self.hackers[team].draw_drop(
                self.rng,
                self.cfg.drops_per_tick_series,
                self.cfg.drops_per_tick_parts,
                self.cfg.bias_probability,
            )
            event = self._log({
                "type": ev.DROP_DELIVERED,
                "tick": self.tick,
                "team": team,
                "series_items": [
                    [rid, t, int(self.match.series.values[rid, t])]
                    for rid, t in series_items
                ],
                "part_items": [
                    [rid, name, self.match.robots[rid].parts.value(name)]
                    for rid, name in part_items
                ],
            })
            self.drops[team].append(event)
            produced.append(event)

        for robot_id in sorted(
            rid for rid in range(self.match.num_robots)
            if self.match.robots[rid].expiration_tick == self.tick
            and self.status_of(rid) == STATUS_PENDING
        ):
            produced.append(self.resolve(robot_id))

        if self.tick == self.cfg.num_ticks:
            produced.append(self._log({
                "type": ev.MATCH_ENDED,
                "tick": self.tick,
                "scores": dict(sorted(self.scores.items())),
            }))
        return produced

    def resolve(self, robot_id: int) -> dict:
        """Resolve one expiring robot; normally called from step()."""
        if self.status_of(robot_id) != STATUS_PENDING:
            raise StateError(f"robot {robot_id} is not pending")
        if self.tick != self.match.robots[robot_id].expiration_tick:
            raise StateError(
                f"robot {robot_id} expires at tick "
                f"{self.match.robots[robot_id].expiration_tick}, not {self.tick}")

        truth = self.match.truth(robot_id)
        guesses = {team: self.bids[team].get(robot_id, DECLINE) for team in self.teams}
        reason, winner_idx = decide(
            truth, guesses[self.teams[0]], guesses[self.teams[1]],
            self.cfg.proximity_threshold,
        )

        totals = None
        if reason == NEEDS_NETWORK:
            totals = network_totals(self.match.network, self.owner, robot_id, self.teams)
            t0, t1 = totals[self.teams[0]], totals[self.teams[1]]
            if t0 != t1:
                reason = REASON_NETWORK_DECISION
                winner_idx = 0 if t0 > t1 else 1
            else:
                reason = REASON_COIN_FLIP
                winner_idx = self.rng.randrange(2)

        winner = None if winner_idx is None else self.teams[winner_idx]
        if winner is None:
            self.powered_down.add(robot_id)
        else:
            self.owner[robot_id] = winner
            self._recompute_scores()

        return self._log({
            "type": ev.ROBOT_RESOLVED,
            "tick": self.tick,
            "robot_id": robot_id,
            "truth": truth,
            "guesses": dict(sorted(guesses.items())),
            "winner": winner,
            "reason": reason,
            "weights": None if totals is None else dict(sorted(totals.items())),
            "productivity": self.match.robots[robot_id].productivity,
        })

    def abort(self, reason: str) -> dict:
        """Mark the match dead (e.g. a scheduler fault); logged, not scored."""
        self.aborted = True
        return self._log({
            "type": ev.MATCH_ABORTED,
            "tick": self.tick,
            "error": str(reason),
        })

    def _recompute_scores(self) -> None:
        # fsum is exactly rounded, so the engine's running score always equals
        # an independent recomputation from the match files, bit for bit.
        for team in self.teams:
            self.scores[team] = math.fsum(
                self.match.robots[rid].productivity
                for rid in sorted(self.owner)
                if self.owner[rid] == team
            )

    # --------------------------------------------------------------- readouts

    def public_snapshot(self, team: "str | None" = None) -> dict:
        """Everything a team may see; never unresolved productivity or the
        other team's bids, interests, or deliveries."""
        if team is not None:
            self._check_team(team)
        robots = []
        for r in self.match.robots:
            status = self.status_of(r.id)
            robots.append({
                "id": r.id,
                "name": r.name,
                "expiration_tick": r.expiration_tick,
                "status": status,
                "claimed_by": self.owner.get(r.id),
                "productivity": r.productivity if status != STATUS_PENDING else None,
            })
        snapshot = {
            **self._static_snapshot,
            "tick": self.tick,
            "finished": self.finished,
            "teams": list(self.teams),
            "scores": dict(sorted(self.scores.items())),
            "robots": robots,
        }
        if team is not None:
            snapshot["you"] = {
                "team": team,
                "bids": {str(rid): g for rid, g in sorted(self.bids[team].items())},
                "interests": self.interests[team].to_dict(),
                "drops": list(self.drops[team]),
            }
        return snapshot

    def drops_for(self, team: str, since: int = -1) -> list:
        """This team's deliveries after tick `since` (a polling cursor)."""
        self._check_team(team)
        return [d for d in self.drops[team] if d["tick"] > since]

    def state_digest(self) -> str:
        """Hash of the full mutable state; equal digests mean equal futures."""
        doc = {
            "tick": self.tick,
            "owner": {str(k): v for k, v in sorted(self.owner.items())},
            "powered_down": sorted(self.powered_down),
            "bids": {t: {str(k): v for k, v in sorted(b.items())} for t, b in self.bids.items()},
            "interests": {t: i.to_dict() for t, i in self.interests.items()},
            "scores": dict(sorted(self.scores.items())),
            "pool_sizes": {
                t: [len(h.series_pool), len(h.parts_pool)] for t, h in self.hackers.items()
            },
            "rng": repr(self.rng.getstate()),
            "log_hash": ev.log_hash(self.events),
        }
        return sha256_hex(canonical_json(doc).encode("utf-8"))
