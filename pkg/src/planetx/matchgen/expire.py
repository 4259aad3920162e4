"""Expiration tick assignment, with optional productivity-linked bias."""

from ..errors import ConfigError


def assign_expirations(rng, config, productivities) -> list:
    """One expiration tick per robot, inside the configured window.

    - bias "none": i.i.d. uniform integers over the window.
    - bias "early_productive"/"late_productive": robots ranked by
      productivity are mapped onto evenly spaced slots across the window
      (most productive earliest/latest), each jittered so the ordering is
      strong but not exact.
    """
    lo, hi = config.expiration_window
    if hi <= lo:
        raise ConfigError("expiration_window", "window must span at least one tick")
    n = len(productivities)

    if config.expiration_bias == "none":
        return [rng.randint(lo, hi) for _ in range(n)]

    span = hi - lo
    jitter = span / 8.0
    order = sorted(range(n), key=lambda i: (productivities[i], i))
    if config.expiration_bias == "early_productive":
        order = order[::-1]  # most productive first -> earliest slots

    ticks = [0] * n
    for rank, robot in enumerate(order):
        slot = lo + (rank + 0.5) / n * span
        tick = round(slot + rng.uniform(-jitter, jitter))
        ticks[robot] = min(hi, max(lo, tick))
    return ticks
