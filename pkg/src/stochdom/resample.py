"""Seeded, replicate-addressable resampling kernels.

All randomness flows through :func:`substream`: replicate ``k`` of any
resampled object is drawn from an independent generator that is a pure
function of ``(seed, stream, k)``.  Two consequences the rest of the library
relies on:

  * determinism: identical inputs and seed give byte-identical outputs;
  * order independence: replicate vectors do not depend on how many
    replicates are generated, in what order, or across how many workers,
    so ``bootstrap_indices(n, 4, seed)`` is exactly the first four rows of
    ``bootstrap_indices(n, 10, seed)``.

Independent uses inside one procedure (e.g. the two samples of a recentered
bootstrap) are separated by the ``stream`` tag.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .ecdf import as_grid, as_sample
from .errors import BadArgument, LengthMismatch
from .functionals import ResampledDistribution, ScaleFactor

# Documented default master seed used when a caller does not supply one.
DEFAULT_SEED = 16180339

METHOD_RECENTERED = "recentered_bootstrap"
METHOD_POOLED = "pooled_bootstrap"
METHOD_PAIRED = "paired_bootstrap"
METHOD_SUBSAMPLING = "subsampling"
METHOD_MULTIPLIER = "multiplier"

METHODS = (
    METHOD_RECENTERED,
    METHOD_POOLED,
    METHOD_PAIRED,
    METHOD_SUBSAMPLING,
    METHOD_MULTIPLIER,
)

BOOTSTRAP_FAMILY = (METHOD_RECENTERED, METHOD_POOLED, METHOD_PAIRED, METHOD_MULTIPLIER)


def substream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator addressed by (seed, key), regardless of call order."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=key))


@dataclass(frozen=True)
class ResamplingPlan:
    """Which resampling method to run, how many replicates, and the seed."""

    method: str = METHOD_RECENTERED
    nboot: int = 200
    b1: int | None = None
    b2: int | None = None
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.method not in METHODS:
            raise BadArgument(f"unknown resampling method {self.method!r}; choose one of {METHODS}")
        if self.nboot < 1:
            raise BadArgument("nboot must be >= 1")


def bootstrap_indices(n: int, nboot: int, seed: int, stream: int = 0, ndraw: int | None = None) -> np.ndarray:
    """Matrix of bootstrap indices; row k holds ndraw iid draws from {0..n-1}.

    ``ndraw`` defaults to ``n`` (resamples of the original size).
    """
    if n < 2:
        raise BadArgument(f"bootstrap needs a sample of size >= 2, got {n}")
    if nboot < 1:
        raise BadArgument("nboot must be >= 1")
    ndraw = n if ndraw is None else int(ndraw)
    out = np.empty((nboot, ndraw), dtype=np.int64)
    for k in range(nboot):
        out[k] = substream(seed, stream, k).integers(0, n, size=ndraw)
    return out


def pooled_bootstrap_indices(n1: int, n2: int, nboot: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Two index matrices (nboot x n1, nboot x n2) into the pooled array of length n1+n2."""
    if n1 < 2 or n2 < 2:
        raise BadArgument("pooled bootstrap needs both samples of size >= 2")
    pooled = n1 + n2
    idx1 = np.empty((nboot, n1), dtype=np.int64)
    idx2 = np.empty((nboot, n2), dtype=np.int64)
    for k in range(nboot):
        idx1[k] = substream(seed, 0, k).integers(0, pooled, size=n1)
        idx2[k] = substream(seed, 1, k).integers(0, pooled, size=n2)
    return idx1, idx2


def paired_bootstrap_indices(n1: int, nboot: int, seed: int, n2: int | None = None) -> np.ndarray:
    """One shared index row per replicate, applied jointly to both samples."""
    if n2 is not None and n2 != n1:
        raise LengthMismatch(f"paired bootstrap requires equal sample sizes, got {n1} and {n2}")
    return bootstrap_indices(n1, nboot, seed, stream=0)


def subsample_blocks(n: int, b: int) -> list[tuple[int, int]]:
    """All n-b+1 contiguous overlapping blocks of length b, as (start, stop) pairs."""
    if b < 2:
        raise BadArgument(f"subsample size b must be >= 2, got {b}")
    if b > n:
        raise BadArgument(f"subsample size b = {b} exceeds the sample size {n}")
    return [(i, i + b) for i in range(n - b + 1)]


def _unit_open_uniform(rng: np.random.Generator, size: int) -> np.ndarray:
    # Midpoints of a 2^53 lattice: strictly inside (0, 1) so ndtri stays finite.
    return (rng.integers(0, 1 << 53, size=size) + 0.5) * 2.0**-53


def _standard_normals(rng: np.random.Generator, size: int) -> np.ndarray:
    """Normal deviates via the inverse-CDF transform of the uniform stream."""
    return ndtri(_unit_open_uniform(rng, size))


def _kernel_matrix(values: np.ndarray, points: np.ndarray, s: int) -> np.ndarray:
    """Per-observation curve contributions h_i(x) = max(x - X_i, 0)^(s-1) / (s-1)!."""
    if s == 1:
        return (values[:, None] <= points[None, :]).astype(float)
    return np.maximum(points[None, :] - values[:, None], 0.0) ** (s - 1) / math.factorial(s - 1)


def multiplier_process_curves(sample1, sample2, grid, s: int, nboot: int, seed: int) -> np.ndarray:
    """Simulated two-sample limit-process curves, one row per replicate.

    Each replicate weights the centered per-observation contributions of each
    sample with fresh standard-normal multipliers and scales the difference
    by lam = sqrt(n1 n2 / (n1 + n2)), so rows live on the same scale as
    lam * (difference curve) fluctuations.
    """
    sp1, sp2 = as_sample(sample1, "sample1"), as_sample(sample2, "sample2")
    points = as_grid(grid).points
    H1 = _kernel_matrix(sp1.values, points, s)
    H2 = _kernel_matrix(sp2.values, points, s)
    F1 = H1.mean(axis=0)
    F2 = H2.mean(axis=0)
    n1, n2 = sp1.n, sp2.n
    lam = ScaleFactor.from_sizes(n1, n2).lam
    rows = np.empty((nboot, points.size))
    for k in range(nboot):
        u1 = _standard_normals(substream(seed, 0, k), n1)
        u2 = _standard_normals(substream(seed, 1, k), n2)
        sim1 = (u1 @ H1 - u1.sum() * F1) / n1
        sim2 = (u2 @ H2 - u2.sum() * F2) / n2
        rows[k] = lam * (sim1 - sim2)
    return rows


def multiplier_replicates(sample1, sample2, grid, s: int, nboot: int, seed: int) -> ResampledDistribution:
    """Supremum-type replicates of the multiplier-simulated process."""
    rows = multiplier_process_curves(sample1, sample2, grid, s, nboot, seed)
    return ResampledDistribution(rows.max(axis=1), METHOD_MULTIPLIER)
