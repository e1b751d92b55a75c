"""Inference procedures for stochastic dominance hypotheses.

All pairwise procedures test H0: sample1 s-th order stochastically dominates
sample2, i.e. the integrated-CDF difference D(x) = F1^(s)(x) - F2^(s)(x) is
<= 0 everywhere.  They differ in the statistic and in how the resampled null
distribution is built:

  test_sd          supremum statistic with least-favorable-case critical
                   values from a recentered / pooled / paired bootstrap or a
                   multiplier simulation, or with subsampling critical values
                   from all contiguous blocks.
  test_sd_contact  one-sided L2 statistic; bootstrap replicates are
                   integrated only over the estimated contact set
                   {x : q(x)|D(x)| < c_N}, falling back to the full grid when
                   the estimate is empty.
  test_sd_sr       supremum statistic; bootstrap replicates are selectively
                   recentered by adding lam * mu(x) inside the sup, where
                   mu(x) keeps D(x) only where it is below a_N / sqrt(N).
  test_sd_ndm      numerical directional-derivative replicates
                   (phi(D + eps Z*) - phi(D)) / eps for the KS and L1
                   functionals and the second-order quotient / eps^2 for L2.
  test_maximality  min-sup statistic over all ordered prospect pairs with
                   recentered bootstrap replicates (K-prospect test of
                   stochastic non-maximality).

Every procedure is deterministic given the plan's seed, and replicate k only
consumes the substream addressed by (seed, stream, k), so replicate vectors
are independent of execution order and parallelism.
"""

import math
import time
from dataclasses import dataclass, field, replace

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .ecdf import Grid, WeightSpec, _check_order, _icdf_sorted, as_sample, integrated_ecdf, set_grid, weight_q
from .errors import BadArgument, LengthMismatch, MissingSubsampleSize
from .functionals import (
    ResampledDistribution,
    ScaleFactor,
    ks_statistic,
    l2_statistic,
    minmax_statistic,
    p_value,
    quantile,
)
from .resample import (
    BOOTSTRAP_FAMILY,
    METHOD_MULTIPLIER,
    METHOD_PAIRED,
    METHOD_POOLED,
    METHOD_RECENTERED,
    METHOD_SUBSAMPLING,
    ResamplingPlan,
    bootstrap_indices,
    multiplier_process_curves,
    paired_bootstrap_indices,
    pooled_bootstrap_indices,
    subsample_blocks,
)

APPROACHES = ("lfc", "contact", "sr", "ndm")
FUNCTIONALS = ("ks", "l1", "l2")


@dataclass(frozen=True)
class TestConfig:
    """Procedure choice, SD order, resampling plan, and tuning parameters."""

    s: int = 1
    ngrid: int = 100
    alpha: float = 0.05
    plan: ResamplingPlan = field(default_factory=ResamplingPlan)
    approach: str = "lfc"
    functional: str = "l1"
    c: float = 0.75
    a: float = 0.1
    eta: float = 1e-6
    epsilon: float | None = None
    ndm_symmetric: bool = False
    weight: WeightSpec | None = None

    def __post_init__(self):
        _check_order(self.s)
        if not isinstance(self.ngrid, (int, np.integer)) or self.ngrid < 2:
            raise BadArgument(f"ngrid must be an integer >= 2, got {self.ngrid!r}")
        if not 0.0 < self.alpha < 1.0:
            raise BadArgument(f"alpha must lie in (0, 1), got {self.alpha}")
        object.__setattr__(self, "approach", str(self.approach).lower())
        object.__setattr__(self, "functional", str(self.functional).lower())
        if self.approach not in APPROACHES:
            raise BadArgument(f"unknown approach {self.approach!r}; choose one of {APPROACHES}")
        if self.functional not in FUNCTIONALS:
            raise BadArgument(f"unknown functional {self.functional!r}; choose one of {FUNCTIONALS}")
        if self.c <= 0 or self.a <= 0 or self.eta <= 0:
            raise BadArgument("tuning constants c, a, eta must be positive")
        if self.epsilon is not None and self.epsilon <= 0:
            raise BadArgument("epsilon must be positive when given")

    @property
    def seed(self) -> int:
        return self.plan.seed


@dataclass(frozen=True)
class ContactSet:
    """Grid-point membership of the estimated contact set."""

    member: np.ndarray
    c_N: float

    @property
    def lebesgue_positive(self) -> bool:
        return bool(np.any(self.member))


@dataclass(frozen=True)
class RecenteringCurve:
    """Thresholded difference curve mu(x) = D(x) 1{D(x) < threshold}."""

    values: np.ndarray
    threshold: float


@dataclass(frozen=True)
class TestResult:
    """Statistic, resampled distribution, decision quantities, and inputs echo."""

    procedure: str
    statistic: float
    critical_value: float
    p_value: float
    resampled: ResampledDistribution
    grid: Grid
    curves: tuple
    difference: np.ndarray | None
    labels: tuple
    sizes: tuple
    config: TestConfig
    detail: dict
    contact: ContactSet | None = None
    recentering: RecenteringCurve | None = None
    elapsed: float = 0.0

    @property
    def reject(self) -> bool:
        return self.statistic > self.critical_value


@dataclass(frozen=True)
class ScanResult:
    """Per-candidate subsampling results plus the three b-selection rules."""

    b: np.ndarray
    critical_values: np.ndarray
    p_values: np.ndarray
    min_volatility_b: int
    min_volatility_critical: float
    mean_critical: float
    median_critical: float


def _pairwise_setup(sample1, sample2, config):
    sp1 = as_sample(sample1, "sample1")
    sp2 = as_sample(sample2, "sample2")
    grid = set_grid([sp1, sp2], config.ngrid)
    F1 = integrated_ecdf(sp1, grid, config.s)
    F2 = integrated_ecdf(sp2, grid, config.s)
    scale = ScaleFactor.from_sizes(sp1.n, sp2.n)
    return sp1, sp2, grid, F1, F2, F1 - F2, scale


def _curves_from_indices(values: np.ndarray, idx: np.ndarray, points: np.ndarray, s: int) -> np.ndarray:
    """Integrated ECDF of each resampled row, evaluated on the grid points."""
    draws = np.sort(values[idx], axis=1)
    out = np.empty((idx.shape[0], points.size))
    for k in range(idx.shape[0]):
        out[k] = _icdf_sorted(draws[k], points, s)
    return out


def _require_bootstrap_family(plan: ResamplingPlan, what: str):
    if plan.method not in BOOTSTRAP_FAMILY:
        raise BadArgument(
            f"{what} requires a bootstrap-family resampling plan "
            f"{BOOTSTRAP_FAMILY}, got {plan.method!r}"
        )


def _simulated_process_rows(sp1, sp2, grid, s, plan, D, scale) -> np.ndarray:
    """One lam-scaled null-process curve per replicate (nboot x ngrid).

    recentered:  lam * ((F1* - F2*) - D)   with independent index draws
    paired:      same recentering but one shared index row for both samples
    pooled:      lam * (F1* - F2*)         with both resamples drawn from the
                                           pooled values (centered by pooling)
    multiplier:  lam-scaled difference of the simulated per-sample processes
    """
    pts = grid.points
    if plan.method == METHOD_MULTIPLIER:
        return multiplier_process_curves(sp1, sp2, grid, s, plan.nboot, plan.seed)
    if plan.method == METHOD_RECENTERED:
        idx1 = bootstrap_indices(sp1.n, plan.nboot, plan.seed, stream=0)
        idx2 = bootstrap_indices(sp2.n, plan.nboot, plan.seed, stream=1)
        C1 = _curves_from_indices(sp1.values, idx1, pts, s)
        C2 = _curves_from_indices(sp2.values, idx2, pts, s)
        return scale.lam * ((C1 - C2) - D)
    if plan.method == METHOD_PAIRED:
        if sp1.n != sp2.n:
            raise LengthMismatch(
                f"paired bootstrap requires equal sample sizes, got {sp1.n} and {sp2.n}"
            )
        idx = paired_bootstrap_indices(sp1.n, plan.nboot, plan.seed)
        C1 = _curves_from_indices(sp1.values, idx, pts, s)
        C2 = _curves_from_indices(sp2.values, idx, pts, s)
        return scale.lam * ((C1 - C2) - D)
    if plan.method == METHOD_POOLED:
        pool = np.concatenate([sp1.values, sp2.values])
        idx1, idx2 = pooled_bootstrap_indices(sp1.n, sp2.n, plan.nboot, plan.seed)
        C1 = _curves_from_indices(pool, idx1, pts, s)
        C2 = _curves_from_indices(pool, idx2, pts, s)
        return scale.lam * (C1 - C2)
    raise BadArgument(f"{plan.method!r} does not generate simulated process curves")


def _subsample_statistics(sp1, sp2, grid, s, b1: int, b2: int) -> np.ndarray:
    """Supremum statistic on every contiguous block pair, scaled by the block sizes."""
    blocks1 = subsample_blocks(sp1.n, b1)
    blocks2 = subsample_blocks(sp2.n, b2)
    # Blocks are paired by replicate index; with equal sizes this is the full
    # N - b + 1 enumeration.
    m = min(len(blocks1), len(blocks2))
    lam_b = ScaleFactor.from_sizes(b1, b2).lam
    w1 = np.sort(sliding_window_view(sp1.values, b1)[:m], axis=1)
    w2 = np.sort(sliding_window_view(sp2.values, b2)[:m], axis=1)
    stats = np.empty(m)
    for i in range(m):
        d = _icdf_sorted(w1[i], grid.points, s) - _icdf_sorted(w2[i], grid.points, s)
        stats[i] = lam_b * np.max(d)
    return stats


def test_sd(sample1, sample2, config: TestConfig | None = None) -> TestResult:
    """Supremum-type SD test with least-favorable-case or subsampling critical values."""
    t0 = time.perf_counter()
    config = config if config is not None else TestConfig()
    sp1, sp2, grid, F1, F2, D, scale = _pairwise_setup(sample1, sample2, config)
    stat = ks_statistic(D, scale)
    plan = config.plan
    if plan.method == METHOD_SUBSAMPLING:
        if plan.b1 is None or plan.b2 is None:
            raise MissingSubsampleSize("subsampling requires both b1 and b2 in the plan")
        reps = _subsample_statistics(sp1, sp2, grid, config.s, plan.b1, plan.b2)
        detail = {"b1": float(plan.b1), "b2": float(plan.b2), "n_blocks": float(reps.size)}
    else:
        rows = _simulated_process_rows(sp1, sp2, grid, config.s, plan, D, scale)
        reps = rows.max(axis=1)
        detail = {}
    resampled = ResampledDistribution(reps, plan.method)
    return TestResult(
        procedure="lfc",
        statistic=stat,
        critical_value=quantile(reps, 1.0 - config.alpha),
        p_value=p_value(resampled, stat),
        resampled=resampled,
        grid=grid,
        curves=(F1, F2),
        difference=D,
        labels=(sp1.label, sp2.label),
        sizes=(sp1.n, sp2.n),
        config=config,
        detail=detail,
        elapsed=time.perf_counter() - t0,
    )


def contact_threshold(n1: int, n2: int, c: float) -> float:
    """Contact-set cutoff c_N = c log(log(N)) / sqrt(N) with N = (n1 + n2) / 2."""
    nbar = (n1 + n2) / 2.0
    return c * math.log(math.log(nbar)) / math.sqrt(nbar)


def test_sd_contact(sample1, sample2, config: TestConfig | None = None) -> TestResult:
    """One-sided L2 SD test with critical values from the estimated contact set."""
    t0 = time.perf_counter()
    config = config if config is not None else TestConfig(approach="contact")
    _require_bootstrap_family(config.plan, "the contact-set approach")
    sp1, sp2, grid, F1, F2, D, scale = _pairwise_setup(sample1, sample2, config)
    q = weight_q(grid, config.s, config.weight)
    stat = l2_statistic(D, grid, q, scale)

    c_N = contact_threshold(sp1.n, sp2.n, config.c)
    member = (q * np.abs(D)) < c_N
    contact = ContactSet(member, c_N)
    # Empty estimate: integrate the replicates over the full grid instead.
    # The indicator multiply keeps the summation tree identical to the
    # full-grid computation, so restricted replicates never exceed it.
    indicator = member.astype(float) if contact.lebesgue_positive else np.ones_like(q)

    rows = _simulated_process_rows(sp1, sp2, grid, config.s, config.plan, D, scale)
    integrand = np.maximum(q[None, :] * rows, 0.0) ** 2
    reps = (integrand * indicator[None, :]).sum(axis=1) * grid.spacing
    resampled = ResampledDistribution(reps, config.plan.method)

    return TestResult(
        procedure="contact",
        statistic=stat,
        critical_value=quantile(reps, 1.0 - config.alpha),
        p_value=p_value(resampled, stat),
        resampled=resampled,
        grid=grid,
        curves=(F1, F2),
        difference=D,
        labels=(sp1.label, sp2.label),
        sizes=(sp1.n, sp2.n),
        config=config,
        detail={"c_N": c_N, "n_contact": float(member.sum())},
        contact=contact,
        elapsed=time.perf_counter() - t0,
    )


def recentering_threshold(n1: int, n2: int, a: float) -> tuple[float, float]:
    """Shift a_N = -a sqrt(log(log(N))) and the cutoff a_N / sqrt(N), N = n1 + n2."""
    ntot = n1 + n2
    a_N = -a * math.sqrt(math.log(math.log(ntot)))
    return a_N, a_N / math.sqrt(ntot)


def test_sd_sr(sample1, sample2, config: TestConfig | None = None) -> TestResult:
    """Supremum-type SD test with selectively recentered bootstrap critical values."""
    t0 = time.perf_counter()
    config = config if config is not None else TestConfig(approach="sr")
    _require_bootstrap_family(config.plan, "the selective recentering approach")
    sp1, sp2, grid, F1, F2, D, scale = _pairwise_setup(sample1, sample2, config)
    stat = ks_statistic(D, scale)

    a_N, threshold = recentering_threshold(sp1.n, sp2.n, config.a)
    mu = np.where(D < threshold, D, 0.0)
    rows = _simulated_process_rows(sp1, sp2, grid, config.s, config.plan, D, scale)
    reps = (rows + scale.lam * mu[None, :]).max(axis=1)
    resampled = ResampledDistribution(reps, config.plan.method)

    return TestResult(
        procedure="sr",
        statistic=stat,
        critical_value=max(quantile(reps, 1.0 - config.alpha), config.eta),
        p_value=p_value(resampled, stat),
        resampled=resampled,
        grid=grid,
        curves=(F1, F2),
        difference=D,
        labels=(sp1.label, sp2.label),
        sizes=(sp1.n, sp2.n),
        config=config,
        detail={"a_N": a_N, "recenter_threshold": threshold},
        recentering=RecenteringCurve(mu, threshold),
        elapsed=time.perf_counter() - t0,
    )


def default_ndm_step(scale: ScaleFactor) -> float:
    """Default numerical-derivative step size lam^(-1/16)."""
    return scale.lam ** (-1.0 / 16.0)


def test_sd_ndm(sample1, sample2, config: TestConfig | None = None) -> TestResult:
    """SD test whose replicates are numerical directional derivatives.

    The first-order difference quotient is used for the KS and L1 functionals
    and the one-sided second-order quotient for L2; ``config.ndm_symmetric``
    switches L2 to the three-point quotient.
    """
    t0 = time.perf_counter()
    config = config if config is not None else TestConfig(approach="ndm")
    _require_bootstrap_family(config.plan, "the numerical delta method")
    sp1, sp2, grid, F1, F2, D, scale = _pairwise_setup(sample1, sample2, config)
    func = config.functional
    eps = config.epsilon if config.epsilon is not None else default_ndm_step(scale)
    dx = grid.spacing

    if func == "ks":
        def phi(rows2d):
            return np.maximum(rows2d, 0.0).max(axis=-1)
        stat = scale.lam * float(phi(D))
    elif func == "l1":
        def phi(rows2d):
            return np.maximum(rows2d, 0.0).sum(axis=-1) * dx
        stat = scale.lam * float(phi(D))
    else:
        def phi(rows2d):
            return (np.maximum(rows2d, 0.0) ** 2).sum(axis=-1) * dx
        stat = scale.lam**2 * float(phi(D))

    rows = _simulated_process_rows(sp1, sp2, grid, config.s, config.plan, D, scale)
    if config.plan.method == METHOD_POOLED:
        # Z* is always bootstrap-curve minus sample-curve; pooled rows are not
        # recentered by D, so remove it here.
        Z = rows - scale.lam * D[None, :]
    else:
        Z = rows
    base = float(phi(D))
    if func in ("ks", "l1"):
        reps = (phi(D[None, :] + eps * Z) - base) / eps
    elif config.ndm_symmetric:
        reps = (phi(D[None, :] + 2.0 * eps * Z) - 2.0 * phi(D[None, :] - eps * Z) + base) / (2.0 * eps**2)
    else:
        reps = (phi(D[None, :] + eps * Z) - base) / eps**2
    resampled = ResampledDistribution(reps, config.plan.method)

    return TestResult(
        procedure="ndm",
        statistic=stat,
        critical_value=quantile(reps, 1.0 - config.alpha),
        p_value=p_value(resampled, stat),
        resampled=resampled,
        grid=grid,
        curves=(F1, F2),
        difference=D,
        labels=(sp1.label, sp2.label),
        sizes=(sp1.n, sp2.n),
        config=config,
        detail={"epsilon": eps},
        elapsed=time.perf_counter() - t0,
    )


def maximality_scale(sizes) -> float:
    """Scale for the K-prospect min-sup statistic.

    Defined so that K = 2 reduces exactly to the two-sample factor
    sqrt(n1 n2 / (n1 + n2)); for K > 2 the harmonic mean H of the sizes
    takes the place of n1 n2 / (n1 + n2) * 2, giving sqrt(H / 2).
    """
    sizes = [int(n) for n in sizes]
    if len(sizes) == 2:
        return ScaleFactor.from_sizes(sizes[0], sizes[1]).lam
    harmonic = len(sizes) / sum(1.0 / n for n in sizes)
    return math.sqrt(harmonic / 2.0)


def test_maximality(samples, config: TestConfig | None = None) -> TestResult:
    """Joint test of stochastic non-maximality among K prospects.

    H0: at least one prospect s-th order dominates another (the min over all
    ordered pairs of the sup of the pair difference is <= 0).  Rejection
    supports stochastic maximality: no prospect dominates any other.
    """
    t0 = time.perf_counter()
    config = config if config is not None else TestConfig()
    if len(samples) < 2:
        raise BadArgument("test_maximality needs at least 2 samples")
    sps = [as_sample(s, f"sample{j + 1}") for j, s in enumerate(samples)]
    plan = config.plan
    if plan.method not in (METHOD_RECENTERED, METHOD_PAIRED):
        raise BadArgument(
            "test_maximality supports the recentered and paired bootstrap plans, "
            f"got {plan.method!r}"
        )
    K = len(sps)
    grid = set_grid(sps, config.ngrid)
    pts = grid.points
    F = [integrated_ecdf(sp, grid, config.s) for sp in sps]
    pairs = [(k, l) for k in range(K) for l in range(K) if k != l]
    D_list = [F[k] - F[l] for k, l in pairs]
    lam = maximality_scale([sp.n for sp in sps])
    stat = minmax_statistic(D_list, lam)

    if plan.method == METHOD_PAIRED:
        sizes = {sp.n for sp in sps}
        if len(sizes) != 1:
            raise LengthMismatch("paired bootstrap requires all samples to share one size")
        idx = paired_bootstrap_indices(sps[0].n, plan.nboot, plan.seed)
        boot = [_curves_from_indices(sp.values, idx, pts, config.s) for sp in sps]
    else:
        boot = [
            _curves_from_indices(
                sp.values,
                bootstrap_indices(sp.n, plan.nboot, plan.seed, stream=j),
                pts,
                config.s,
            )
            for j, sp in enumerate(sps)
        ]
    pair_sups = np.stack(
        [((boot[k] - boot[l]) - D[None, :]).max(axis=1) for (k, l), D in zip(pairs, D_list)]
    )
    reps = lam * pair_sups.min(axis=0)
    resampled = ResampledDistribution(reps, plan.method)

    return TestResult(
        procedure="maximality",
        statistic=stat,
        critical_value=quantile(reps, 1.0 - config.alpha),
        p_value=p_value(resampled, stat),
        resampled=resampled,
        grid=grid,
        curves=tuple(F),
        difference=None,
        labels=tuple(sp.label for sp in sps),
        sizes=tuple(sp.n for sp in sps),
        config=config,
        detail={"n_pairs": float(len(pairs))},
        elapsed=time.perf_counter() - t0,
    )


def _min_volatility_index(critical_values: np.ndarray) -> int:
    """Candidate whose centered 3-window of critical values has the smallest sd.

    Endpoints have no centered window and are not eligible; with fewer than 3
    candidates the first one is returned.
    """
    m = critical_values.size
    if m < 3:
        return 0
    stds = [float(np.std(critical_values[i - 1 : i + 2])) for i in range(1, m - 1)]
    return 1 + int(np.argmin(stds))


def scan_subsample_size(sample1, sample2, config: TestConfig | None = None, b_candidates=()) -> ScanResult:
    """Subsampling run per candidate block size plus the three b-selection rules.

    The same block size is applied to both samples.  Minimum volatility picks
    the candidate with the most stable critical values; the mean and median
    rules aggregate the critical-value column into an operative critical value.
    """
    config = config if config is not None else TestConfig()
    b_candidates = [int(b) for b in b_candidates]
    if not b_candidates:
        raise BadArgument("scan_subsample_size needs at least one candidate block size")
    crits = np.empty(len(b_candidates))
    pvals = np.empty(len(b_candidates))
    for i, b in enumerate(b_candidates):
        plan_b = replace(config.plan, method=METHOD_SUBSAMPLING, b1=b, b2=b)
        res = test_sd(sample1, sample2, replace(config, plan=plan_b))
        crits[i] = res.critical_value
        pvals[i] = res.p_value
    pick = _min_volatility_index(crits)
    return ScanResult(
        b=np.asarray(b_candidates, dtype=int),
        critical_values=crits,
        p_values=pvals,
        min_volatility_b=b_candidates[pick],
        min_volatility_critical=float(crits[pick]),
        mean_critical=float(np.mean(crits)),
        median_critical=float(np.median(crits)),
    )
