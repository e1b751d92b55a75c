"""Determinism, substream addressing, and distributional sanity of the kernels."""

import numpy as np
import pytest

import stochdom as sd
import stochdom.resample as resample
from stochdom.errors import BadArgument, LengthMismatch

SEED = 20240612


def test_bootstrap_indices_deterministic_and_in_range():
    a = sd.bootstrap_indices(3, 2, SEED)
    b = sd.bootstrap_indices(3, 2, SEED)
    np.testing.assert_array_equal(a, b)
    m = sd.bootstrap_indices(17, 50, SEED)
    assert m.shape == (50, 17)
    assert m.min() >= 0 and m.max() <= 16


def test_bootstrap_indices_prefix_stable():
    # replicate k depends only on (seed, stream, k), not on nboot
    full = sd.bootstrap_indices(11, 10, SEED)
    head = sd.bootstrap_indices(11, 4, SEED)
    np.testing.assert_array_equal(full[:4], head)


def test_bootstrap_indices_streams_differ():
    a = sd.bootstrap_indices(11, 5, SEED, stream=0)
    b = sd.bootstrap_indices(11, 5, SEED, stream=1)
    assert not np.array_equal(a, b)


def test_bootstrap_indices_uniform_mean():
    n = 1000
    idx = sd.bootstrap_indices(n, 1, SEED)
    sigma = np.sqrt((n**2 - 1) / (12 * n))
    assert abs(idx.mean() - (n - 1) / 2) <= 3 * sigma


def test_bootstrap_indices_rejects_tiny_sample():
    with pytest.raises(BadArgument):
        sd.bootstrap_indices(1, 5, SEED)


def test_pooled_indices_span_and_balance():
    idx1, idx2 = sd.pooled_bootstrap_indices(100, 100, 200, SEED)
    assert idx1.shape == (200, 100) and idx2.shape == (200, 100)
    pooled = np.concatenate([idx1.ravel(), idx2.ravel()])
    assert pooled.min() >= 0 and pooled.max() <= 199
    again = sd.pooled_bootstrap_indices(100, 100, 200, SEED)
    np.testing.assert_array_equal(idx1, again[0])
    # each source sample receives about half of the pooled mass
    draws = pooled.size
    share = np.mean(pooled < 100)
    assert abs(share - 0.5) <= 4 * np.sqrt(0.25 / draws)


def test_paired_indices_shared_and_validated():
    idx = sd.paired_bootstrap_indices(9, 7, SEED)
    assert idx.shape == (7, 9)
    np.testing.assert_array_equal(idx, sd.paired_bootstrap_indices(9, 7, SEED))
    with pytest.raises(LengthMismatch):
        sd.paired_bootstrap_indices(9, 7, SEED, n2=8)


def test_subsample_blocks_enumeration():
    assert sd.subsample_blocks(5, 3) == [(0, 3), (1, 4), (2, 5)]
    assert sd.subsample_blocks(5, 5) == [(0, 5)]
    with pytest.raises(BadArgument):
        sd.subsample_blocks(5, 6)
    with pytest.raises(BadArgument):
        sd.subsample_blocks(5, 1)


def test_subsample_blocks_cover_every_index():
    for n, b in [(10, 2), (10, 7), (25, 5)]:
        blocks = sd.subsample_blocks(n, b)
        assert len(blocks) == n - b + 1
        covered = set()
        for start, stop in blocks:
            covered.update(range(start, stop))
        assert covered == set(range(n))


def test_multiplier_forced_zero_multipliers(monkeypatch):
    rng = np.random.default_rng(1)
    x, y = rng.normal(size=40), rng.normal(size=50)
    grid = sd.set_grid([x, y], 20)
    monkeypatch.setattr(resample, "_standard_normals", lambda gen, size: np.zeros(size))
    reps = sd.multiplier_replicates(x, y, grid, 1, 25, SEED)
    np.testing.assert_array_equal(reps.values, np.zeros(25))


def test_multiplier_seeded_determinism():
    rng = np.random.default_rng(2)
    x, y = rng.normal(size=30), rng.normal(size=30)
    grid = sd.set_grid([x, y], 15)
    a = sd.multiplier_replicates(x, y, grid, 2, 40, SEED)
    b = sd.multiplier_replicates(x, y, grid, 2, 40, SEED)
    np.testing.assert_array_equal(a.values, b.values)
    assert a.method == "multiplier"


def test_multiplier_process_zero_mean_at_interior_point():
    rng = np.random.default_rng(3)
    x, y = rng.normal(size=60), rng.normal(size=60)
    grid = sd.set_grid([x, y], 21)
    rows = sd.multiplier_process_curves(x, y, grid, 1, 2000, SEED)
    col = rows[:, 10]
    se = col.std(ddof=1) / np.sqrt(col.size)
    assert abs(col.mean()) <= 3 * se


def test_resampling_plan_validation():
    with pytest.raises(BadArgument):
        sd.ResamplingPlan(method="jackknife")
    with pytest.raises(BadArgument):
        sd.ResamplingPlan(nboot=0)
    plan = sd.ResamplingPlan()
    assert plan.method == "recentered_bootstrap"
    assert plan.nboot == 200
    assert plan.seed == sd.DEFAULT_SEED
