import dataclasses

import pytest

from planetx.config import MatchConfig
from planetx.engine import GameEngine
from planetx.matchgen import generate_match

SMALL = MatchConfig(seed=11, num_robots=20, num_ticks=30, expiration_window=(5, 29))


@pytest.fixture(scope="session")
def small_match():
    return generate_match(SMALL)


@pytest.fixture()
def small_engine(small_match):
    return GameEngine(small_match, "alpha", "beta", engine_seed=99)


def force_truth(match, robot_id, expiration_tick, truth):
    """Pin one robot's expiration and answer (for scripted scenarios)."""
    match.robots[robot_id] = dataclasses.replace(
        match.robots[robot_id], expiration_tick=expiration_tick)
    match.series.values[robot_id, expiration_tick] = truth
    return match
