"""Grids, empirical integrated CDFs, their differences, and related transforms.

The central object is the empirical integrated CDF of order ``s``,

    F^(s)(x) = (1 / (N (s-1)!)) * sum_i  max(x - X_i, 0)^(s-1),

with the order-1 convention that the summand is the indicator 1{X_i <= x},
i.e. the ordinary right-continuous ECDF.  Order 2 is the running integral of
the ECDF, order 3 the double integral, and so on.  Curves are always evaluated
on a fixed grid of equally spaced points spanning the pooled support of the
samples under comparison; nothing is ever evaluated between grid points.

Evaluation uses a sorted copy of the sample: one binary search per grid point
for s = 1, and prefix sums of the powers of the sorted values for s >= 2,
which costs O((n + ngrid) log n) per curve.  Resampling procedures recompute
thousands of these curves, so this is the cost that matters.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadArgument, DegenerateSupport, NonPositivePrice

# Orders above this are rejected; the factorial is exact and practical SD
# orders are 1-4.
MAX_ORDER = 20


@dataclass(frozen=True)
class Sample:
    """A one-dimensional batch of real observations with a display label."""

    values: np.ndarray
    label: str = "sample"

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1:
            raise BadArgument(f"sample {self.label!r} must be 1-dimensional")
        if values.size < 2:
            raise BadArgument(f"sample {self.label!r} needs at least 2 observations")
        if not np.all(np.isfinite(values)):
            raise BadArgument(f"sample {self.label!r} contains non-finite values")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return int(self.values.size)


def as_sample(data, label: str = "sample") -> Sample:
    """Coerce an array-like (or pass through a Sample) with validation."""
    if isinstance(data, Sample):
        return data
    return Sample(np.asarray(data, dtype=float), label)


@dataclass(frozen=True)
class Grid:
    """Ordered evaluation points plus the nominal spacing (max-min)/(ngrid-1)."""

    points: np.ndarray
    spacing: float

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        if points.ndim != 1 or points.size < 2:
            raise BadArgument("grid needs at least 2 points")
        if not np.all(np.diff(points) > 0):
            raise BadArgument("grid points must be strictly increasing")
        object.__setattr__(self, "points", points)

    @property
    def ngrid(self) -> int:
        return int(self.points.size)


def as_grid(points) -> Grid:
    if isinstance(points, Grid):
        return points
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 1 or pts.size < 2:
        raise BadArgument("grid needs at least 2 points")
    return Grid(pts, float((pts[-1] - pts[0]) / (pts.size - 1)))


def set_grid(samples, ngrid: int) -> Grid:
    """Equally spaced grid from the pooled minimum to the pooled maximum.

    Parameters
    ----------
    samples : iterable of Sample or array-like
    ngrid : number of grid points, >= 2; the endpoints are included.
    """
    if not isinstance(ngrid, (int, np.integer)) or ngrid < 2:
        raise BadArgument(f"ngrid must be an integer >= 2, got {ngrid!r}")
    samples = [as_sample(s) for s in samples]
    if not samples:
        raise BadArgument("set_grid needs at least one sample")
    lo = min(float(s.values.min()) for s in samples)
    hi = max(float(s.values.max()) for s in samples)
    if not hi > lo:
        raise DegenerateSupport(f"pooled support is degenerate: min = max = {lo}")
    return Grid(np.linspace(lo, hi, int(ngrid)), (hi - lo) / (int(ngrid) - 1))


def _check_order(s) -> int:
    if not isinstance(s, (int, np.integer)) or s < 1:
        raise BadArgument(f"SD order s must be an integer >= 1, got {s!r}")
    if s > MAX_ORDER:
        raise BadArgument(f"SD order s = {s} exceeds the supported maximum {MAX_ORDER}")
    return int(s)


def _icdf_sorted(sorted_values: np.ndarray, points: np.ndarray, s: int) -> np.ndarray:
    """Integrated ECDF of pre-sorted values at ``points``.

    For s >= 2 the truncated moment sum is expanded binomially so that the
    prefix sums of the value powers are shared across grid points:

        sum_{X_i <= x} (x - X_i)^(s-1)
            = sum_j C(s-1, j) x^(s-1-j) (-1)^j sum_{X_i <= x} X_i^j.
    """
    n = sorted_values.size
    pos = np.searchsorted(sorted_values, points, side="right")
    if s == 1:
        return pos / n
    p = s - 1
    acc = np.zeros(points.size)
    sign = 1.0
    for j in range(p + 1):
        prefix = np.concatenate(([0.0], np.cumsum(sorted_values**j)))
        acc += math.comb(p, j) * sign * points ** (p - j) * prefix[pos]
        sign = -sign
    # The expansion cancels imperfectly (~1e-16 scale); the exact curve is
    # nonnegative and nondecreasing, so restore both guarantees.
    np.maximum(acc, 0.0, out=acc)
    np.maximum.accumulate(acc, out=acc)
    return acc / (n * math.factorial(p))


def integrated_ecdf(sample, grid, s: int = 1) -> np.ndarray:
    """Empirical integrated CDF of order ``s`` evaluated at every grid point.

    Returns an array aligned index-for-index with ``grid``; for s = 1 the
    value at x is the fraction of observations <= x (weak inequality).
    """
    s = _check_order(s)
    sample = as_sample(sample)
    grid = as_grid(grid)
    return _icdf_sorted(np.sort(sample.values), grid.points, s)


def ecdf_difference(sample1, sample2, grid, s: int = 1) -> np.ndarray:
    """Pointwise difference of the two integrated ECDFs on the grid."""
    return integrated_ecdf(sample1, grid, s) - integrated_ecdf(sample2, grid, s)


@dataclass(frozen=True)
class WeightSpec:
    """Parameters of the tapered weight function used by the L2 statistic.

    The weight equals 1 on [z1, z2] and decays as a / (a + |x - z|^e) outside
    of it, with exponent e = max(s - 1, 1 + delta).  When ``enabled`` is off
    (the default) the weight is identically 1.
    """

    z1: float = -1.0
    z2: float = 1.0
    a: float = 1.0
    delta: float = 1.0
    enabled: bool = False

    def __post_init__(self):
        if not self.z1 < self.z2:
            raise BadArgument(f"weight interval requires z1 < z2, got [{self.z1}, {self.z2}]")
        if self.a <= 0 or self.delta <= 0:
            raise BadArgument("weight parameters a and delta must be positive")


def weight_q(grid, s: int = 1, spec: WeightSpec | None = None) -> np.ndarray:
    """Evaluate the weight function on the grid; all ones when disabled."""
    s = _check_order(s)
    grid = as_grid(grid)
    x = grid.points
    if spec is None or not spec.enabled:
        return np.ones_like(x)
    exponent = max(s - 1, 1 + spec.delta)
    q = np.ones_like(x)
    above = x > spec.z2
    below = x < spec.z1
    q[above] = spec.a / (spec.a + np.abs(x[above] - spec.z2) ** exponent)
    q[below] = spec.a / (spec.a + np.abs(x[below] - spec.z1) ** exponent)
    return q


def log_returns(prices) -> np.ndarray:
    """Log returns ln(P_{t+1} / P_t) of a positive price series.

    A series of n prices yields n - 1 returns.  Wrap the result in a Sample
    (which requires at least 2 observations) before testing with it.
    """
    prices = np.asarray(prices, dtype=float)
    if prices.ndim != 1 or prices.size < 2:
        raise BadArgument("log_returns needs at least 2 prices")
    if not np.all(np.isfinite(prices)):
        raise BadArgument("price series contains non-finite values")
    if np.any(prices <= 0):
        bad = int(np.argmax(prices <= 0))
        raise NonPositivePrice(f"price at position {bad} is {prices[bad]}; prices must be > 0")
    return np.diff(np.log(prices))
