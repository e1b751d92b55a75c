"""Walkthrough: stochastic maximality among K = 3 prospects.

The null says at least one prospect first-order dominates another; rejecting
it certifies the whole set as maximal (no prospect is redundant).  The three
normals below all cross pairwise, so the set is maximal and the test should
reject.
"""

import numpy as np

import stochdom as sd

rng = np.random.default_rng(0)
N = 1000
prospects = [
    0.0 + 1.0 * rng.normal(size=N),
    0.5 + 1.5 * rng.normal(size=N),
    1.0 + 2.0 * rng.normal(size=N),
]

cfg = sd.TestConfig(ngrid=100, plan=sd.ResamplingPlan(nboot=200, seed=3))
res = sd.test_maximality(prospects, cfg)

print(f"Test statistic:   {res.statistic:.3f}")
print(f"Critical value:   {res.critical_value:.3f}")
print(f"P-value:          {res.p_value:.3f}")
print(f"Reject H0 (non-maximality): {res.reject}")

# Sanity: an identical pair makes one prospect dominate (weakly), so the
# non-maximality null should survive easily.
clone = prospects[0].copy()
res_clone = sd.test_maximality([prospects[0], clone, prospects[2]], cfg)
print(f"\nWith a cloned prospect: statistic {res_clone.statistic:.3f}, "
      f"p {res_clone.p_value:.3f}, reject={res_clone.reject}")
