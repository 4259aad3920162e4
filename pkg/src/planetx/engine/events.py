"""Match log events: newline-delimited canonical JSON, hash-chained tail.

The log is the replay source of truth: re-simulating the command events
(bids, interests, tick advances) against the same match files reproduces
every generated event, so the whole file hashes identically.
"""

import json
from pathlib import Path

from ..canonical import canonical_json, hash_documents
from ..errors import MatchIOError

MATCH_STARTED = "match_started"
TICK_ADVANCED = "tick_advanced"
BID_SUBMITTED = "bid_submitted"
INTERESTS_UPDATED = "interests_updated"
DROP_DELIVERED = "drop_delivered"
ROBOT_RESOLVED = "robot_resolved"
MATCH_ENDED = "match_ended"
MATCH_ABORTED = "match_aborted"
LOG_HASH = "log_hash"

# Events a replay feeds back into the engine; everything else is regenerated.
COMMAND_EVENTS = (BID_SUBMITTED, INTERESTS_UPDATED, TICK_ADVANCED)


def log_hash(events) -> str:
    return hash_documents(events)


def write_log(events, path) -> str:
    """Write events plus the trailing hash line; returns the hash."""
    digest = log_hash(events)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for event in events:
            f.write(canonical_json(event))
            f.write("\n")
        f.write(canonical_json({"type": LOG_HASH, "hash": digest}))
        f.write("\n")
    return digest


def read_log(path):
    """Returns (events, recorded_hash); recorded_hash is None for a log
    that was cut off before its hash line (a crashed or live session)."""
    path = Path(path)
    if not path.exists():
        raise MatchIOError(f"missing log file: {path}")
    events = []
    recorded = None
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                event = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MatchIOError(f"{path}:{lineno}: corrupt log line: {exc}") from exc
            if event.get("type") == LOG_HASH:
                recorded = event.get("hash")
            else:
                events.append(event)
    if not events or events[0].get("type") != MATCH_STARTED:
        raise MatchIOError(f"{path}: log does not begin with a {MATCH_STARTED} event")
    return events, recorded
