"""Top-level match generation: one config in, one complete MatchData out.

All randomness flows from config.seed through fixed-order sub-seeds (one
independent stream per subsystem), so identical configs produce identical
matches in any process.
"""

import random
from dataclasses import dataclass

import numpy as np

from ..config import MatchConfig
from .expire import assign_expirations
from .names import gen_names
from .network import SocialNetwork, gen_social_network
from .parts import PartVector, ProductivityModel, gen_parts_productivity
from .series import TimeSeriesTable, gen_time_series
from .tree import FamilyTree, gen_family_tree


@dataclass(frozen=True)
class RobotRecord:
    id: int
    name: str
    expiration_tick: int
    parts: PartVector
    productivity: float

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "expiration_tick": self.expiration_tick,
            "parts": self.parts.to_dict(),
            "productivity": self.productivity,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RobotRecord":
        return cls(
            id=int(d["id"]),
            name=str(d["name"]),
            expiration_tick=int(d["expiration_tick"]),
            parts=PartVector.from_dict(d["parts"]),
            productivity=float(d["productivity"]),
        )


@dataclass
class MatchData:
    config: MatchConfig
    robots: list  # RobotRecord, indexed by id
    series: TimeSeriesTable
    network: SocialNetwork
    tree: FamilyTree
    model: ProductivityModel

    @property
    def num_robots(self) -> int:
        return len(self.robots)

    def truth(self, robot_id: int) -> int:
        return self.series.truth(robot_id, self.robots[robot_id].expiration_tick)


def generate_match(config: MatchConfig) -> MatchData:
    """Generate every table for one match from the config alone."""
    config.validate()
    master = random.Random(config.seed)
    # Fixed draw order; each subsystem gets its own independent stream.
    seeds = {key: master.getrandbits(64) for key in
             ("names", "network", "tree", "series", "parts", "expire")}

    n = config.num_robots
    names = gen_names(random.Random(seeds["names"]), n)
    network = gen_social_network(
        random.Random(seeds["network"]), n,
        config.network_edges_per_node, config.network_triad_probability,
    )
    tree = gen_family_tree(random.Random(seeds["tree"]), list(range(n)), config)
    series = gen_time_series(np.random.default_rng(seeds["series"]), tree, config)
    parts, model = gen_parts_productivity(random.Random(seeds["parts"]), config, n)
    productivities = [model.apply(p) for p in parts]
    expirations = assign_expirations(random.Random(seeds["expire"]), config, productivities)

    robots = [
        RobotRecord(
            id=i,
            name=names[i],
            expiration_tick=expirations[i],
            parts=parts[i],
            productivity=productivities[i],
        )
        for i in range(n)
    ]
    return MatchData(
        config=config, robots=robots, series=series,
        network=network, tree=tree, model=model,
    )
