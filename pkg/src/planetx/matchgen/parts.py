"""Robot parts and the hidden productivity model.

Each robot carries 10 parts: 7 quantitative (4 on a 0..100 scale, 3 on a
0..1 scale — the mixed scales are deliberate) and 3 categorical drawn from
{Alpha, Beta, Gamma}.  Productivity is a fixed linear function of the
parts, clipped to [-100, 100].  Only a small "active set" of parts gets
weights that matter; the rest are noise-level, so the signal is learnable
but not obvious.
"""

import math
from dataclasses import dataclass

from ..errors import GenerationError

CATEGORY_LABELS = ("Alpha", "Beta", "Gamma")


@dataclass(frozen=True)
class PartSpec:
    name: str
    kind: str  # "quant" | "cat"
    low: float = 0.0
    high: float = 1.0


PART_SPECS = (
    PartSpec("drive_torque", "quant", 0.0, 100.0),
    PartSpec("optic_gain", "quant", 0.0, 100.0),
    PartSpec("armor_rating", "quant", 0.0, 100.0),
    PartSpec("battery_cycles", "quant", 0.0, 100.0),
    PartSpec("gyro_drift", "quant", 0.0, 1.0),
    PartSpec("signal_purity", "quant", 0.0, 1.0),
    PartSpec("coolant_ratio", "quant", 0.0, 1.0),
    PartSpec("cpu_family", "cat"),
    PartSpec("plating", "cat"),
    PartSpec("firmware_branch", "cat"),
)

QUANT_SPECS = tuple(s for s in PART_SPECS if s.kind == "quant")
CAT_SPECS = tuple(s for s in PART_SPECS if s.kind == "cat")
PART_NAMES = tuple(s.name for s in PART_SPECS)

PRODUCTIVITY_MIN = -100.0
PRODUCTIVITY_MAX = 100.0


@dataclass(frozen=True)
class PartVector:
    """One robot's 7 quantitative values + 3 categorical labels, in PART_SPECS order."""

    quantitative: tuple
    categorical: tuple

    def __post_init__(self):
        if len(self.quantitative) != len(QUANT_SPECS):
            raise GenerationError(f"expected {len(QUANT_SPECS)} quantitative parts")
        if len(self.categorical) != len(CAT_SPECS):
            raise GenerationError(f"expected {len(CAT_SPECS)} categorical parts")

    def value(self, part_name: str):
        for i, spec in enumerate(QUANT_SPECS):
            if spec.name == part_name:
                return self.quantitative[i]
        for i, spec in enumerate(CAT_SPECS):
            if spec.name == part_name:
                return self.categorical[i]
        raise KeyError(part_name)

    def to_dict(self) -> dict:
        d = {spec.name: v for spec, v in zip(QUANT_SPECS, self.quantitative)}
        d.update({spec.name: v for spec, v in zip(CAT_SPECS, self.categorical)})
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PartVector":
        return cls(
            quantitative=tuple(float(d[s.name]) for s in QUANT_SPECS),
            categorical=tuple(str(d[s.name]) for s in CAT_SPECS),
        )


@dataclass(frozen=True)
class ProductivityModel:
    """Linear parts -> productivity map.

    ``apply`` is the only code path that computes productivity, at
    generation time and at verification time, so stored values always
    reproduce exactly.
    """

    weights: tuple  # one per quantitative part, PART_SPECS order
    categorical_effects: dict  # cat part name -> {label: effect}
    intercept: float
    active_set: tuple  # part names with dominant weights

    def apply(self, parts: PartVector) -> float:
        total = self.intercept
        for w, v in zip(self.weights, parts.quantitative):
            total += w * v
        for spec, label in zip(CAT_SPECS, parts.categorical):
            total += self.categorical_effects[spec.name][label]
        return min(PRODUCTIVITY_MAX, max(PRODUCTIVITY_MIN, total))

    def to_dict(self) -> dict:
        return {
            "weights": {s.name: w for s, w in zip(QUANT_SPECS, self.weights)},
            "categorical_effects": {k: dict(v) for k, v in self.categorical_effects.items()},
            "intercept": self.intercept,
            "active_set": list(self.active_set),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ProductivityModel":
        return cls(
            weights=tuple(float(d["weights"][s.name]) for s in QUANT_SPECS),
            categorical_effects={k: dict(v) for k, v in d["categorical_effects"].items()},
            intercept=float(d["intercept"]),
            active_set=tuple(d["active_set"]),
        )


def _sample_part_vector(rng) -> PartVector:
    quant = tuple(rng.uniform(s.low, s.high) for s in QUANT_SPECS)
    cat = tuple(rng.choice(CATEGORY_LABELS) for _ in CAT_SPECS)
    return PartVector(quantitative=quant, categorical=cat)


def _sample_model(rng) -> ProductivityModel:
    active_count = rng.randint(2, 4)
    active = tuple(sorted(rng.sample(PART_NAMES, active_count)))

    weights = []
    for spec in QUANT_SPECS:
        # Dominant weights span roughly +-50..150 of productivity over the
        # part's range; inactive weights contribute a couple points at most.
        span = spec.high - spec.low
        if spec.name in active:
            magnitude = rng.uniform(50.0, 150.0) / span
            weights.append(magnitude if rng.random() < 0.5 else -magnitude)
        else:
            weights.append(rng.uniform(-2.0, 2.0) / span)

    effects = {}
    for spec in CAT_SPECS:
        scale = 40.0 if spec.name in active else 2.0
        effects[spec.name] = {label: rng.uniform(-scale, scale) for label in CATEGORY_LABELS}

    intercept = rng.uniform(-10.0, 10.0)
    return ProductivityModel(
        weights=tuple(weights),
        categorical_effects=effects,
        intercept=intercept,
        active_set=active,
    )


def gen_parts_productivity(rng, config, n: int):
    """Sample part vectors and a productivity model for n robots.

    Returns (part_vectors, model).  The model's intercept is shifted upward
    until mean clipped productivity is positive; if no robot lands below
    zero the model is redrawn (bounded retries) so that bad recruits exist.
    """
    if n < 2:
        raise GenerationError("need at least 2 robots for a productivity model")
    parts = [_sample_part_vector(rng) for _ in range(n)]

    for _ in range(50):
        model = _sample_model(rng)
        model = _shift_intercept_positive(model, parts)
        values = [model.apply(p) for p in parts]
        mean = math.fsum(values) / n
        if mean > 0 and any(v < 0 for v in values):
            return parts, model
    raise GenerationError("could not draw a productivity model with mean > 0 and a negative robot")


def _shift_intercept_positive(model: ProductivityModel, parts) -> ProductivityModel:
    # Shift so the unclipped mean sits at a modest positive target, then
    # nudge until the clipped mean is positive too (clipping can drag it).
    raw = []
    for p in parts:
        total = model.intercept
        for w, v in zip(model.weights, p.quantitative):
            total += w * v
        for spec, label in zip(CAT_SPECS, p.categorical):
            total += model.categorical_effects[spec.name][label]
        raw.append(total)
    target = 10.0
    shift = target - math.fsum(raw) / len(raw)
    model = ProductivityModel(
        weights=model.weights,
        categorical_effects=model.categorical_effects,
        intercept=model.intercept + shift,
        active_set=model.active_set,
    )
    for _ in range(400):
        values = [model.apply(p) for p in parts]
        if math.fsum(values) / len(values) > 0:
            break
        model = ProductivityModel(
            weights=model.weights,
            categorical_effects=model.categorical_effects,
            intercept=model.intercept + 1.0,
            active_set=model.active_set,
        )
    return model
