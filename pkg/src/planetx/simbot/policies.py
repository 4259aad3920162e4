"""Bot policies: the omniscient practice opponent and observation-only bots.

Only OmniscientPolicy is constructed with the match truth; every other
policy sees just what a human team would (the public snapshot plus its own
deliveries), enforced by the BotView interface.
"""

from dataclasses import dataclass, field

import numpy as np

from ..engine.state import DECLINE, GUESS_MAX, GUESS_MIN
from ..errors import ValidationError


@dataclass(frozen=True)
class BidCommand:
    robot_id: int
    guess: int


@dataclass(frozen=True)
class InterestCommand:
    robot_ids: tuple = ()
    part_names: tuple = ()


@dataclass
class BotView:
    """What a bot may observe: the team-scoped snapshot and its own drops."""

    snapshot: dict
    drops: list = field(default_factory=list)

    @property
    def tick(self) -> int:
        return self.snapshot["tick"]

    def pending_robots(self) -> list:
        return [r for r in self.snapshot["robots"] if r["status"] == "pending"]

    def expiring_within(self, horizon: int) -> list:
        tick = self.tick
        return sorted(
            (r for r in self.pending_robots() if tick < r["expiration_tick"] <= tick + horizon),
            key=lambda r: (r["expiration_tick"], r["id"]),
        )


def clamp_guess(value) -> int:
    return int(min(GUESS_MAX, max(GUESS_MIN, round(value))))


def fit_guess(points, degree: int, expiration_tick: int):
    """Least-squares polynomial guess at the expiration tick.

    Falls back to the highest degree the data supports; None without data.
    """
    if not points:
        return None
    ts = np.array([t for t, _ in points], dtype=float)
    vs = np.array([v for _, v in points], dtype=float)
    deg = min(degree, len(points) - 1, max(len(set(ts.tolist())) - 1, 0))
    coeffs = np.polynomial.polynomial.polyfit(ts, vs, deg)
    predicted = np.polynomial.polynomial.polyval(float(expiration_tick), coeffs)
    return clamp_guess(predicted)


class Policy:
    """Base: stateful over one match, deterministic given (view stream, rng)."""

    name = "base"

    def act(self, view: BotView, rng) -> list:
        raise NotImplementedError


class OmniscientPolicy(Policy):
    """Reads the match files; bids truth + uniform noise in [-E, +E].

    Bids once per robot, as soon as the robot enters the bid horizon.
    """

    name = "omniscient"

    def __init__(self, match, error_range: int = 20, horizon: int = 5):
        if error_range < 0:
            raise ValidationError("error_range must be >= 0")
        self.match = match
        self.error_range = int(error_range)
        self.horizon = horizon
        self._bid: set = set()

    def act(self, view: BotView, rng) -> list:
        commands = []
        for robot in view.expiring_within(self.horizon):
            rid = robot["id"]
            if rid in self._bid:
                continue
            truth = self.match.truth(rid)
            noise = rng.randint(-self.error_range, self.error_range) if self.error_range else 0
            commands.append(BidCommand(rid, clamp_guess(truth + noise)))
            self._bid.add(rid)
        return commands


class _ObservingPolicy(Policy):
    """Shared bookkeeping: accumulate own drops into per-robot tables."""

    def __init__(self, degree: int = 4, horizon: int = 5):
        self.degree = degree
        self.horizon = horizon
        self._drop_cursor = 0
        self._series: dict = {}  # robot_id -> list[(t, v)]
        self._parts: dict = {}  # robot_id -> {part_name: value}
        self._bid: set = set()

    def _ingest(self, view: BotView) -> None:
        for drop in view.drops[self._drop_cursor:]:
            for rid, t, v in drop["series_items"]:
                self._series.setdefault(rid, []).append((t, v))
            for rid, name, v in drop["part_items"]:
                self._parts.setdefault(rid, {})[name] = v
        self._drop_cursor = len(view.drops)

    def _interest_refresh(self, view: BotView, upcoming) -> list:
        wanted = tuple(r["id"] for r in upcoming)
        current = tuple(view.snapshot.get("you", {}).get("interests", {}).get("robot_ids", ()))
        if wanted and wanted != current:
            return [InterestCommand(robot_ids=wanted)]
        return []


class SeriesRegressionPolicy(_ObservingPolicy):
    """Fits a polynomial to delivered series points; declines blind robots."""

    name = "regression"

    def act(self, view: BotView, rng) -> list:
        self._ingest(view)
        upcoming = view.expiring_within(self.horizon)
        commands = self._interest_refresh(view, upcoming)
        for robot in upcoming:
            rid = robot["id"]
            if rid in self._bid:
                continue
            guess = fit_guess(self._series.get(rid, ()), self.degree, robot["expiration_tick"])
            commands.append(BidCommand(rid, DECLINE if guess is None else guess))
            self._bid.add(rid)
        return commands


class ProductivityFilterPolicy(_ObservingPolicy):
    """Declines any robot whose predicted productivity is negative.

    ``predictor`` maps a full {part_name: value} dict to a productivity
    estimate.  Without one, the policy fits a linear model on robots whose
    productivity has been revealed, imputing unseen parts neutrally; with a
    perfectly learned predictor and full part knowledge it never bids on a
    negative robot.
    """

    name = "filter"

    def __init__(self, degree: int = 4, horizon: int = 5, predictor=None, min_training=8):
        super().__init__(degree=degree, horizon=horizon)
        self.predictor = predictor
        self.min_training = min_training

    def act(self, view: BotView, rng) -> list:
        self._ingest(view)
        upcoming = view.expiring_within(self.horizon)
        commands = self._interest_refresh(view, upcoming)
        predictor = self.predictor or self._learned_predictor(view)
        for robot in upcoming:
            rid = robot["id"]
            if rid in self._bid:
                continue
            self._bid.add(rid)
            if predictor is not None:
                predicted = predictor(dict(self._parts.get(rid, {})))
                if predicted is not None and predicted < 0:
                    commands.append(BidCommand(rid, DECLINE))
                    continue
            guess = fit_guess(self._series.get(rid, ()), self.degree, robot["expiration_tick"])
            commands.append(BidCommand(rid, DECLINE if guess is None else guess))
        return commands

    def _learned_predictor(self, view: BotView):
        from ..matchgen.parts import CAT_SPECS, CATEGORY_LABELS, QUANT_SPECS

        revealed = [r for r in view.snapshot["robots"] if r["productivity"] is not None]
        rows = [r for r in revealed if self._parts.get(r["id"])]
        if len(rows) < self.min_training:
            return None

        quant_names = [s.name for s in QUANT_SPECS]
        means = {}
        for name in quant_names:
            seen = [p[name] for p in self._parts.values() if name in p]
            means[name] = sum(seen) / len(seen) if seen else 0.0

        def encode(parts: dict) -> list:
            row = [parts.get(name, means[name]) for name in quant_names]
            for spec in CAT_SPECS:
                label = parts.get(spec.name)
                row.extend(1.0 if label == lab else 0.0 for lab in CATEGORY_LABELS)
            row.append(1.0)  # intercept
            return row

        matrix = np.array([encode(self._parts[r["id"]]) for r in rows])
        target = np.array([r["productivity"] for r in rows])
        coeffs, *_ = np.linalg.lstsq(matrix, target, rcond=None)

        def predictor(parts: dict):
            return float(np.dot(encode(parts), coeffs))

        return predictor


class NetworkGreedyPolicy(_ObservingPolicy):
    """Bids only on well-connected robots (degree above the median)."""

    name = "greedy"

    def act(self, view: BotView, rng) -> list:
        self._ingest(view)
        degrees = self._degrees(view)
        cutoff = sorted(degrees.values())[len(degrees) // 2] if degrees else 0
        upcoming = view.expiring_within(self.horizon)
        commands = self._interest_refresh(
            view, [r for r in upcoming if degrees.get(r["id"], 0) >= cutoff])
        for robot in upcoming:
            rid = robot["id"]
            if rid in self._bid:
                continue
            self._bid.add(rid)
            if degrees.get(rid, 0) < cutoff:
                commands.append(BidCommand(rid, DECLINE))
                continue
            guess = fit_guess(self._series.get(rid, ()), self.degree, robot["expiration_tick"])
            commands.append(BidCommand(rid, 50 if guess is None else guess))
        return commands

    def _degrees(self, view: BotView) -> dict:
        degrees: dict = {}
        for u, v in view.snapshot["network"]["edges"]:
            degrees[u] = degrees.get(u, 0) + 1
            degrees[v] = degrees.get(v, 0) + 1
        return degrees


def extend_error(policy: OmniscientPolicy, error_range: int) -> OmniscientPolicy:
    """Same omniscient policy, different noise range (0 = exact oracle)."""
    if error_range < 0:
        raise ValidationError("error_range must be >= 0")
    return OmniscientPolicy(policy.match, error_range=error_range, horizon=policy.horizon)


def make_policy(spec: str, match=None) -> Policy:
    """Parse 'kind[:param]' bot specs, e.g. 'omniscient:10' or 'regression'."""
    kind, _, param = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "omniscient":
        if match is None:
            raise ValidationError("omniscient policy needs match files")
        return OmniscientPolicy(match, error_range=int(param) if param else 20)
    if kind == "regression":
        return SeriesRegressionPolicy(degree=int(param) if param else 4)
    if kind == "filter":
        return ProductivityFilterPolicy(degree=int(param) if param else 4)
    if kind == "greedy":
        return NetworkGreedyPolicy(degree=int(param) if param else 4)
    raise ValidationError(f"unknown policy {spec!r}")


__all__ = [
    "BidCommand", "InterestCommand", "BotView", "Policy",
    "OmniscientPolicy", "SeriesRegressionPolicy", "ProductivityFilterPolicy",
    "NetworkGreedyPolicy", "extend_error", "make_policy", "fit_guess", "clamp_guess",
]
