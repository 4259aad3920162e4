"""Core engine value types and status constants."""

from dataclasses import dataclass

# Wire encoding for "we don't want this robot".
DECLINE = -1

GUESS_MIN = 0
GUESS_MAX = 100

STATUS_PENDING = "pending"
STATUS_CLAIMED = "claimed"
STATUS_POWERED_DOWN = "powered_down"

REASON_BOTH_DECLINED = "both_declined"
REASON_SOLE_BIDDER = "sole_bidder"
REASON_CLOSEST_OUTSIDE_THRESHOLD = "closest_outside_threshold"
REASON_NETWORK_DECISION = "network_decision"
REASON_COIN_FLIP = "coin_flip"


@dataclass(frozen=True)
class Bid:
    team: str
    robot_id: int
    guess: int  # GUESS_MIN..GUESS_MAX or DECLINE
    submitted_tick: int


@dataclass(frozen=True)
class InterestSet:
    robot_ids: tuple
    part_names: tuple
    updated_tick: int

    def to_dict(self) -> dict:
        return {
            "robot_ids": list(self.robot_ids),
            "part_names": list(self.part_names),
            "updated_tick": self.updated_tick,
        }
