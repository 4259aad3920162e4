"""Tick-based game engine: bids, drops, resolution, scores, replayable log."""

from .engine import GameEngine
from .replay import ReplayReport, resume_engine, verify_log
from .state import (
    DECLINE,
    GUESS_MAX,
    GUESS_MIN,
    Bid,
    InterestSet,
    REASON_BOTH_DECLINED,
    REASON_CLOSEST_OUTSIDE_THRESHOLD,
    REASON_COIN_FLIP,
    REASON_NETWORK_DECISION,
    REASON_SOLE_BIDDER,
    STATUS_CLAIMED,
    STATUS_PENDING,
    STATUS_POWERED_DOWN,
)

__all__ = [
    "GameEngine",
    "resume_engine",
    "verify_log",
    "ReplayReport",
    "DECLINE",
    "GUESS_MIN",
    "GUESS_MAX",
    "Bid",
    "InterestSet",
    "REASON_BOTH_DECLINED",
    "REASON_SOLE_BIDDER",
    "REASON_CLOSEST_OUTSIDE_THRESHOLD",
    "REASON_NETWORK_DECISION",
    "REASON_COIN_FLIP",
    "STATUS_PENDING",
    "STATUS_CLAIMED",
    "STATUS_POWERED_DOWN",
]
