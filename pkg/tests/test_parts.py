import math
import random

import pytest

from planetx.config import MatchConfig
from planetx.errors import GenerationError
from planetx.matchgen import (
    CATEGORY_LABELS,
    PartVector,
    ProductivityModel,
    gen_parts_productivity,
)
from planetx.matchgen.parts import CAT_SPECS, QUANT_SPECS


def test_degenerate_model_is_constant():
    model = ProductivityModel(
        weights=(0.0,) * 7,
        categorical_effects={s.name: {lab: 0.0 for lab in CATEGORY_LABELS} for s in CAT_SPECS},
        intercept=5.0,
        active_set=(),
    )
    parts = PartVector(
        quantitative=(10.0, 20.0, 30.0, 40.0, 0.5, 0.6, 0.7),
        categorical=("Alpha", "Beta", "Gamma"),
    )
    assert model.apply(parts) == 5.0


def test_values_within_declared_ranges():
    parts, _ = gen_parts_productivity(random.Random(0), MatchConfig(seed=0), 200)
    for pv in parts:
        for spec, v in zip(QUANT_SPECS, pv.quantitative):
            assert spec.low <= v <= spec.high
        for label in pv.categorical:
            assert label in CATEGORY_LABELS


def test_productivity_bounds_mean_and_negatives():
    for seed in range(50):
        parts, model = gen_parts_productivity(random.Random(seed), MatchConfig(seed=seed), 100)
        values = [model.apply(p) for p in parts]
        assert all(-100.0 <= v <= 100.0 for v in values)
        assert math.fsum(values) / len(values) > 0
        assert any(v < 0 for v in values)


def test_recompute_reproduces_exactly():
    parts, model = gen_parts_productivity(random.Random(3), MatchConfig(seed=3), 100)
    first = [model.apply(p) for p in parts]
    second = [model.apply(p) for p in parts]
    assert first == second  # bit-exact, same code path


def test_active_set_size_and_dominance():
    for seed in range(20):
        _, model = gen_parts_productivity(random.Random(seed), MatchConfig(seed=seed), 100)
        assert 2 <= len(model.active_set) <= 4
        # Active quantitative weights dominate inactive ones once scaled by range.
        for spec, w in zip(QUANT_SPECS, model.weights):
            contribution = abs(w) * (spec.high - spec.low)
            if spec.name in model.active_set:
                assert contribution >= 50.0
            else:
                assert contribution <= 2.0


def test_too_few_robots_rejected():
    with pytest.raises(GenerationError):
        gen_parts_productivity(random.Random(0), MatchConfig(seed=0), 1)


def test_model_round_trips_through_dict():
    parts, model = gen_parts_productivity(random.Random(8), MatchConfig(seed=8), 50)
    again = ProductivityModel.from_dict(model.to_dict())
    assert again == model
    assert [again.apply(p) for p in parts] == [model.apply(p) for p in parts]


def test_part_vector_lookup_by_name():
    pv = PartVector(
        quantitative=(1.0, 2.0, 3.0, 4.0, 0.1, 0.2, 0.3),
        categorical=("Alpha", "Gamma", "Beta"),
    )
    assert pv.value("drive_torque") == 1.0
    assert pv.value("coolant_ratio") == 0.3
    assert pv.value("plating") == "Gamma"
    with pytest.raises(KeyError):
        pv.value("warp_coil")
