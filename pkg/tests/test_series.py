import random

import numpy as np

from planetx.config import MatchConfig
from planetx.matchgen import gen_family_tree, gen_time_series
from planetx.matchgen.series import TimeSeriesTable


def make_series(seed, **overrides):
    cfg = MatchConfig(seed=seed, **overrides)
    tree = gen_family_tree(random.Random(seed), list(range(cfg.num_robots)), cfg)
    table = gen_time_series(np.random.default_rng(seed), tree, cfg)
    return cfg, tree, table


def sibling_pairs(tree, n):
    pairs = []
    for kids in tree.children.values():
        leaf_kids = [k for k in kids if k < n]
        for i in range(len(leaf_kids)):
            for j in range(i + 1, len(leaf_kids)):
                pairs.append((leaf_kids[i], leaf_kids[j]))
    return pairs


def test_values_are_integers_in_range():
    _, _, table = make_series(3)
    assert table.values.dtype == np.int64
    assert table.values.min() >= 0
    assert table.values.max() <= 100
    assert table.values.shape == (100, 100)


def test_zero_noise_gives_identical_siblings():
    cfg, tree, table = make_series(5, sibling_noise_scale=0.0)
    for a, b in sibling_pairs(tree, cfg.num_robots):
        assert np.array_equal(table.values[a], table.values[b])


def test_sibling_correlation_beats_random_pairs():
    # Brute-force oracle: Pearson correlation straight from the value table.
    wins = 0
    seeds = range(30)
    for seed in seeds:
        cfg, tree, table = make_series(seed)
        corr = np.corrcoef(table.values.astype(float))
        sib = sibling_pairs(tree, cfg.num_robots)
        sib_set = set(sib) | {(b, a) for a, b in sib}
        rng = random.Random(seed)
        non_sib = []
        while len(non_sib) < len(sib):
            a, b = rng.randrange(100), rng.randrange(100)
            if a != b and (a, b) not in sib_set:
                non_sib.append((a, b))
        mean_sib = np.mean([corr[a, b] for a, b in sib])
        mean_non = np.mean([corr[a, b] for a, b in non_sib])
        if mean_sib > mean_non:
            wins += 1
    assert wins >= int(0.95 * len(seeds))


def test_nonpolynomial_variant_changes_values_and_keeps_range():
    _, _, plain = make_series(11)
    _, _, wavy = make_series(11, nonpolynomial_series=True)
    assert wavy.sinusoids is not None
    assert not np.array_equal(plain.values, wavy.values)
    assert wavy.values.min() >= 0 and wavy.values.max() <= 100


def test_every_cell_populated_spans_full_scale():
    # Affine rescale pins each robot's min to 0 and max to 100.
    _, _, table = make_series(2)
    assert np.all(table.values.min(axis=1) == 0)
    assert np.all(table.values.max(axis=1) == 100)


def test_round_trips_through_dict():
    _, _, table = make_series(4, nonpolynomial_series=True)
    again = TimeSeriesTable.from_dict(table.to_dict())
    assert table.equals(again)
