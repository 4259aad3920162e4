"""Deterministic match generation: robots, series, network, tree, parts."""

from .expire import assign_expirations
from .generate import MatchData, RobotRecord, generate_match
from .io import load_match, match_documents, match_hash, save_match
from .names import gen_names
from .network import SocialNetwork, gen_social_network
from .parts import (
    CATEGORY_LABELS,
    PART_NAMES,
    PART_SPECS,
    PartVector,
    ProductivityModel,
    gen_parts_productivity,
)
from .series import TimeSeriesTable, gen_time_series
from .tree import FamilyTree, gen_family_tree

__all__ = [
    "MatchData",
    "RobotRecord",
    "generate_match",
    "save_match",
    "load_match",
    "match_hash",
    "match_documents",
    "gen_names",
    "SocialNetwork",
    "gen_social_network",
    "PartVector",
    "ProductivityModel",
    "gen_parts_productivity",
    "PART_SPECS",
    "PART_NAMES",
    "CATEGORY_LABELS",
    "TimeSeriesTable",
    "gen_time_series",
    "FamilyTree",
    "gen_family_tree",
    "assign_expirations",
]
