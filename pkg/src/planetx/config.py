"""Match configuration: the single knob set that determines an entire match.

A ``MatchConfig`` plus nothing else fully determines the generated match
data (the seed covers all randomness), so two runs with equal configs
produce byte-identical match files.
"""

from dataclasses import dataclass, asdict

from .errors import ConfigError

EXPIRATION_BIAS_CHOICES = ("none", "early_productive", "late_productive")


@dataclass(frozen=True)
class MatchConfig:
    seed: int
    num_robots: int = 100
    num_ticks: int = 100
    tick_seconds: float = 6.0
    proximity_threshold: int = 10
    poly_degree: int = 4
    drops_per_tick_series: int = 5
    drops_per_tick_parts: int = 5
    bias_probability: float = 0.8
    network_edges_per_node: int = 2
    network_triad_probability: float = 0.1
    group_size_range: tuple = (2, 4)
    expiration_window: tuple = (10, 99)
    nonpolynomial_series: bool = False
    expiration_bias: str = "none"
    sibling_noise_scale: float = 0.1

    def validate(self) -> "MatchConfig":
        """Check every invariant; raise ConfigError naming the violated field."""
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed", "must be a 64-bit unsigned integer")
        if self.num_robots < 2:
            raise ConfigError("num_robots", "need at least 2 robots")
        if self.num_ticks < 1:
            raise ConfigError("num_ticks", "must be positive")
        if self.tick_seconds <= 0:
            raise ConfigError("tick_seconds", "must be positive")
        if self.proximity_threshold < 0:
            raise ConfigError("proximity_threshold", "must be non-negative")
        if self.poly_degree < 0:
            raise ConfigError("poly_degree", "must be non-negative")
        if self.drops_per_tick_series < 0:
            raise ConfigError("drops_per_tick_series", "must be non-negative")
        if self.drops_per_tick_parts < 0:
            raise ConfigError("drops_per_tick_parts", "must be non-negative")
        if not 0.0 <= self.bias_probability <= 1.0:
            raise ConfigError("bias_probability", "must lie in [0, 1]")
        if not 1 <= self.network_edges_per_node < self.num_robots:
            raise ConfigError(
                "network_edges_per_node",
                f"must satisfy 1 <= m < num_robots (got m={self.network_edges_per_node})",
            )
        if not 0.0 <= self.network_triad_probability <= 1.0:
            raise ConfigError("network_triad_probability", "must lie in [0, 1]")
        lo, hi = self.group_size_range
        if not 2 <= lo <= hi:
            raise ConfigError("group_size_range", f"need 2 <= min <= max, got {self.group_size_range}")
        emin, emax = self.expiration_window
        if not (self.num_ticks >= emax > emin >= 1):
            raise ConfigError(
                "expiration_window",
                f"need num_ticks >= max > min >= 1, got {self.expiration_window} with num_ticks={self.num_ticks}",
            )
        if self.expiration_bias not in EXPIRATION_BIAS_CHOICES:
            raise ConfigError("expiration_bias", f"must be one of {EXPIRATION_BIAS_CHOICES}")
        if self.sibling_noise_scale < 0:
            raise ConfigError("sibling_noise_scale", "must be non-negative")
        return self

    def to_dict(self) -> dict:
        d = asdict(self)
        d["group_size_range"] = list(self.group_size_range)
        d["expiration_window"] = list(self.expiration_window)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "MatchConfig":
        d = dict(d)
        d["group_size_range"] = tuple(d["group_size_range"])
        d["expiration_window"] = tuple(d["expiration_window"])
        return cls(**d).validate()
