"""Per-team data-leak sampling.

Each team has its own undelivered pools: one of (robot, tick) series cells
and one of (robot, part) values.  A robot's series value at its expiration
tick is excluded up front — the answer itself is never leaked.  Draws are
without replacement, so no datum reaches the same team twice.

When a team has declared interests, each drawn item comes from the
interest-constrained sub-pool with the configured bias probability
(falling back to the global pool when the sub-pool is exhausted).  The
bias coin is tossed on every draw even without interests, which keeps a
vacuous interest set (e.g. "all robots") byte-identical to no interests
under the same RNG stream.
"""

from ..matchgen.parts import PART_NAMES


class Pool:
    """List-backed set with O(1) membership, swap-removal, and uniform draw."""

    __slots__ = ("items", "pos")

    def __init__(self, items=()):
        self.items = list(items)
        self.pos = {item: i for i, item in enumerate(self.items)}

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, item) -> bool:
        return item in self.pos

    def pick(self, rng):
        return self.items[rng.randrange(len(self.items))]

    def remove(self, item) -> None:
        i = self.pos.pop(item)
        last = self.items.pop()
        if i < len(self.items):
            self.items[i] = last
            self.pos[last] = i


class TeamHacker:
    """Sampling state for one team over one match."""

    def __init__(self, match):
        expirations = {r.id: r.expiration_tick for r in match.robots}
        self.series_pool = Pool(
            (rid, t)
            for rid in range(match.num_robots)
            for t in range(match.config.num_ticks)
            if t != expirations[rid]
        )
        self.parts_pool = Pool(
            (rid, name) for rid in range(match.num_robots) for name in PART_NAMES
        )
        self.series_interest = Pool()
        self.parts_interest = Pool()
        self.has_interests = False

    def set_interests(self, robot_ids, part_names) -> None:
        robots = set(robot_ids)
        parts = set(part_names)
        self.has_interests = bool(robots or parts)
        if self.has_interests:
            self.series_interest = Pool(
                item for item in self.series_pool.items if item[0] in robots
            )
            self.parts_interest = Pool(
                item for item in self.parts_pool.items
                if item[0] in robots or item[1] in parts
            )
        else:
            self.series_interest = Pool()
            self.parts_interest = Pool()

    def _draw(self, rng, bias, pool, interest_pool):
        if len(pool) == 0:
            return None
        coin = rng.random()  # always consumed; see module docstring
        if self.has_interests and coin < bias and len(interest_pool) > 0:
            item = interest_pool.pick(rng)
        else:
            item = pool.pick(rng)
        pool.remove(item)
        if item in interest_pool:
            interest_pool.remove(item)
        return item

    def draw_drop(self, rng, n_series, n_parts, bias):
        """One tick's delivery: up to n_series + n_parts fresh items."""
        series_items = []
        for _ in range(n_series):
            item = self._draw(rng, bias, self.series_pool, self.series_interest)
            if item is None:
                break
            series_items.append(item)
        part_items = []
        for _ in range(n_parts):
            item = self._draw(rng, bias, self.parts_pool, self.parts_interest)
            if item is None:
                break
            part_items.append(item)
        return series_items, part_items
