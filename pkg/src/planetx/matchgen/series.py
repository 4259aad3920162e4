"""Per-robot pseudo-random time series for the guessing game.

Every robot gets a polynomial in u = t/(num_ticks-1) whose coefficients
are inherited down the family tree: the root draws fresh standard normals,
each internal node drifts from its parent by a fixed amount, and each
robot drifts from its tree parent by ``sibling_noise_scale``.  Siblings
therefore share almost the same curve shape while unrelated robots do not.
The raw curve is affinely rescaled per robot to span [0, 100] and rounded
to integers.

With ``nonpolynomial_series`` a sinusoid (amplitude, frequency, phase also
inherited) is added to the raw polynomial before rescaling, which breaks
plain polynomial extrapolation.
"""

from dataclasses import dataclass

import numpy as np

# Drift applied per tree level between internal nodes.  Fixed (not tied to
# sibling_noise_scale) so a zero sibling noise still yields distinct families.
FAMILY_DRIFT_SCALE = 0.5


@dataclass
class TimeSeriesTable:
    values: np.ndarray  # (num_robots, num_ticks) int64 in [0, 100]
    coefficients: np.ndarray  # (num_robots, poly_degree+1) float64, server-side only
    sinusoids: "np.ndarray | None" = None  # (num_robots, 3): amp, freq, phase

    def truth(self, robot_id: int, tick: int) -> int:
        return int(self.values[robot_id, tick])

    def to_dict(self) -> dict:
        return {
            "values": self.values.tolist(),
            "coefficients": self.coefficients.tolist(),
            "sinusoids": None if self.sinusoids is None else self.sinusoids.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TimeSeriesTable":
        sin = d.get("sinusoids")
        return cls(
            values=np.asarray(d["values"], dtype=np.int64),
            coefficients=np.asarray(d["coefficients"], dtype=np.float64),
            sinusoids=None if sin is None else np.asarray(sin, dtype=np.float64),
        )

    def equals(self, other: "TimeSeriesTable") -> bool:
        if not np.array_equal(self.values, other.values):
            return False
        if not np.array_equal(self.coefficients, other.coefficients):
            return False
        if (self.sinusoids is None) != (other.sinusoids is None):
            return False
        return self.sinusoids is None or np.array_equal(self.sinusoids, other.sinusoids)


def gen_time_series(rng: np.random.Generator, tree, config) -> TimeSeriesTable:
    """Generate the full (robot x tick) table of integers in [0, 100]."""
    n = config.num_robots
    n_coeffs = config.poly_degree + 1

    base_coeffs = {tree.root: rng.standard_normal(n_coeffs)}
    base_sin = {tree.root: _fresh_sinusoid(rng)}
    # Walk internal nodes top-down; robots (leaves) drift by sibling noise.
    stack = [tree.root]
    robot_coeffs = np.zeros((n, n_coeffs))
    robot_sin = np.zeros((n, 3))
    while stack:
        node = stack.pop()
        for child in tree.children[node]:
            if tree.is_leaf(child):
                noise = rng.standard_normal(n_coeffs) * config.sibling_noise_scale
                robot_coeffs[child] = base_coeffs[node] + noise
                robot_sin[child] = base_sin[node] + _sin_noise(rng, config.sibling_noise_scale)
            else:
                base_coeffs[child] = base_coeffs[node] + rng.standard_normal(n_coeffs) * FAMILY_DRIFT_SCALE
                base_sin[child] = base_sin[node] + _sin_noise(rng, FAMILY_DRIFT_SCALE)
                stack.append(child)

    ticks = np.arange(config.num_ticks, dtype=np.float64)
    u = ticks / max(config.num_ticks - 1, 1)

    # Horner evaluation, elementwise only, so results are bit-reproducible.
    raw = np.zeros((n, config.num_ticks))
    for k in range(n_coeffs - 1, -1, -1):
        raw = raw * u + robot_coeffs[:, k : k + 1]

    if config.nonpolynomial_series:
        amp = robot_sin[:, 0:1]
        freq = robot_sin[:, 1:2]
        phase = robot_sin[:, 2:3]
        raw = raw + amp * np.sin(2.0 * np.pi * freq * u + phase)

    lo = raw.min(axis=1, keepdims=True)
    hi = raw.max(axis=1, keepdims=True)
    span = hi - lo
    flat = (span == 0.0).ravel()
    span[flat.reshape(-1, 1)] = 1.0
    scaled = (raw - lo) / span * 100.0
    scaled[flat] = 50.0
    values = np.rint(scaled).astype(np.int64)

    return TimeSeriesTable(
        values=values,
        coefficients=robot_coeffs,
        sinusoids=robot_sin if config.nonpolynomial_series else None,
    )


def _fresh_sinusoid(rng: np.random.Generator) -> np.ndarray:
    # Amplitude comparable to the unit-normal polynomial, a few cycles per match.
    return np.array([rng.uniform(0.5, 2.0), rng.uniform(1.5, 6.0), rng.uniform(0.0, 2.0 * np.pi)])


def _sin_noise(rng: np.random.Generator, scale: float) -> np.ndarray:
    return rng.standard_normal(3) * scale * np.array([0.2, 0.2, 0.5])
