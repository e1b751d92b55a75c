"""Scalar functionals of difference curves and of resampled distributions.

Every test statistic in the library is one of three functionals of the
difference curve D (an integrated-ECDF difference evaluated on a grid):

  * supremum (Kolmogorov-Smirnov style):   lam * max_x D(x)
  * one-sided L1:                          lam * sum_x max(D(x), 0) * dx
  * one-sided L2 (Cramer-von Mises style): lam^2 * sum_x max(q(x) D(x), 0)^2 * dx

plus the min-sup statistic over a collection of pairwise difference curves.
The scale ``lam = sqrt(n1 n2 / (n1 + n2))`` is the standard two-sample
normalization; integrals use the rectangle rule over all grid points with the
grid's nominal spacing, so independent oracles can replicate them exactly.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadArgument


@dataclass(frozen=True)
class ScaleFactor:
    """Two-sample normalization sqrt(n1 n2 / (n1 + n2))."""

    n1: int
    n2: int
    lam: float

    @classmethod
    def from_sizes(cls, n1: int, n2: int) -> "ScaleFactor":
        if n1 < 1 or n2 < 1:
            raise BadArgument("sample sizes must be positive")
        return cls(int(n1), int(n2), math.sqrt(n1 * n2 / (n1 + n2)))


@dataclass(frozen=True)
class ResampledDistribution:
    """Replicates of a test statistic produced by one resampling method."""

    values: np.ndarray
    method: str

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise BadArgument("resampled distribution must be a nonempty 1-d array")
        if not np.all(np.isfinite(values)):
            raise BadArgument("resampled distribution contains non-finite values")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.size)


def _lam(scale) -> float:
    return scale.lam if isinstance(scale, ScaleFactor) else float(scale)


def ks_statistic(D, scale) -> float:
    """Supremum-type statistic: scale times the maximum of D over the grid."""
    D = np.asarray(D, dtype=float)
    if D.size == 0:
        raise BadArgument("difference curve is empty")
    return float(_lam(scale) * np.max(D))


def l1_statistic(D, grid, scale) -> float:
    """One-sided L1 statistic: scale times the rectangle-rule integral of max(D, 0)."""
    D = np.asarray(D, dtype=float)
    return float(_lam(scale) * np.sum(np.maximum(D, 0.0)) * grid.spacing)


def l2_statistic(D, grid, q, scale) -> float:
    """One-sided weighted L2 statistic: scale^2 times the integral of max(qD, 0)^2."""
    D = np.asarray(D, dtype=float)
    q = np.asarray(q, dtype=float)
    lam = _lam(scale)
    return float(lam * lam * np.sum(np.maximum(q * D, 0.0) ** 2) * grid.spacing)


def minmax_statistic(D_list, scale) -> float:
    """Min over pairwise curves of the max over the grid, times the scale.

    ``D_list`` holds the difference curves of all ordered prospect pairs; the
    result is the sample analogue of the smallest one-directional dominance
    gap, the basis of the stochastic-maximality test.
    """
    if len(D_list) == 0:
        raise BadArgument("minmax_statistic needs at least one difference curve")
    return float(_lam(scale) * min(float(np.max(np.asarray(D))) for D in D_list))


def quantile(values, p: float) -> float:
    """Empirical quantile with linear interpolation at rank 1 + p(n-1)."""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise BadArgument("quantile of an empty array")
    if not 0.0 <= p <= 1.0:
        raise BadArgument(f"quantile level must be in [0, 1], got {p}")
    return float(np.quantile(values, p))


def p_value(resampled, stat: float) -> float:
    """Fraction of replicates greater than or equal to the statistic."""
    values = resampled.values if isinstance(resampled, ResampledDistribution) else np.asarray(resampled, dtype=float)
    if values.size == 0:
        raise BadArgument("p_value of an empty replicate set")
    return float(np.mean(values >= stat))
