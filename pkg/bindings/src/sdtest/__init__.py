"""sdtest: flat, script-friendly calls over the stochdom core.

Each test function runs one procedure and hands back a plain dict with the
keys ``test_stat``, ``critical_value``, ``p_value``, ``resampled_stats`` and
``grid``; unless ``quiet`` is set it also prints the core's report block.
Every number in the dict comes from the core - this package adds no
numerical code, so a wrapper call and a CLI run with the same seed agree
bit-for-bit.

    >>> import numpy as np, sdtest
    >>> r = sdtest.test_sd(np.random.randn(500), np.random.randn(500),
    ...                    ngrid=100, s=1, resampling="bootstrap")
    >>> r["p_value"]
"""

import numpy as np

import stochdom as core
from stochdom.errors import ConfigError

__all__ = [
    "CDF",
    "bootstrap",
    "paired_bootstrap",
    "set_grid",
    "subsampling",
    "test_sd",
    "test_sd_NDM",
    "test_sd_SR",
    "test_sd_contact",
    "wrap_test",
]

__version__ = "0.1.0"

_KINDS = {
    "lfc": core.test_sd,
    "contact": core.test_sd_contact,
    "sr": core.test_sd_sr,
    "ndm": core.test_sd_ndm,
}

_RESAMPLING = {
    "bootstrap": "recentered_bootstrap",
    "recentered_bootstrap": "recentered_bootstrap",
    "pooled": "pooled_bootstrap",
    "pooled_bootstrap": "pooled_bootstrap",
    "paired": "paired_bootstrap",
    "paired_bootstrap": "paired_bootstrap",
    "subsampling": "subsampling",
    "multiplier": "multiplier",
}


def _method(resampling):
    try:
        return _RESAMPLING[str(resampling)]
    except KeyError:
        raise ConfigError(
            f"unknown resampling {resampling!r}; choose one of "
            "bootstrap, pooled, paired_bootstrap, subsampling, multiplier"
        ) from None


def wrap_test(kind, sample1, sample2, *, ngrid=100, s=1, resampling="bootstrap",
              b1=None, b2=None, nboot=200, alpha=0.05, seed=None, quiet=False,
              c=0.75, a=0.1, eta=1e-06, epsilon=None, form="L1"):
    """Run one core procedure and return its result as a flat mapping."""
    if kind not in _KINDS:
        raise ConfigError(f"unknown test kind {kind!r}; choose one of {sorted(_KINDS)}")
    plan = core.ResamplingPlan(
        method=_method(resampling),
        nboot=nboot,
        b1=b1,
        b2=b2,
        seed=core.DEFAULT_SEED if seed is None else seed,
    )
    config = core.TestConfig(
        s=s,
        ngrid=ngrid,
        alpha=alpha,
        plan=plan,
        approach=kind,
        functional=form,
        c=c,
        a=a,
        eta=eta,
        epsilon=epsilon,
    )
    result = _KINDS[kind](sample1, sample2, config)
    if not quiet:
        print(core.render_report(result))
    return {
        "test_stat": result.statistic,
        "critical_value": result.critical_value,
        "p_value": result.p_value,
        "resampled_stats": result.resampled.values,
        "grid": result.grid.points,
    }


def test_sd(sample1, sample2, ngrid=100, s=1, resampling="bootstrap", b1=None,
            b2=None, nboot=200, quiet=False, alpha=0.05, seed=None):
    """Supremum-type test with LFC bootstrap or subsampling critical values."""
    return wrap_test("lfc", sample1, sample2, ngrid=ngrid, s=s, resampling=resampling,
                     b1=b1, b2=b2, nboot=nboot, quiet=quiet, alpha=alpha, seed=seed)


def test_sd_contact(sample1, sample2, ngrid=100, s=1, resampling="bootstrap",
                    nboot=200, c=0.75, quiet=False, alpha=0.05, seed=None):
    """Contact-set test (one-sided L2 statistic)."""
    return wrap_test("contact", sample1, sample2, ngrid=ngrid, s=s, resampling=resampling,
                     nboot=nboot, c=c, quiet=quiet, alpha=alpha, seed=seed)


def test_sd_SR(sample1, sample2, ngrid=100, s=1, resampling="bootstrap", nboot=200,
               a=0.1, eta=1e-06, quiet=False, alpha=0.05, seed=None):
    """Selective-recentering test."""
    return wrap_test("sr", sample1, sample2, ngrid=ngrid, s=s, resampling=resampling,
                     nboot=nboot, a=a, eta=eta, quiet=quiet, alpha=alpha, seed=seed)


def test_sd_NDM(sample1, sample2, ngrid=100, s=1, resampling="bootstrap", nboot=200,
                epsilon=None, form="L1", quiet=False, alpha=0.05, seed=None):
    """Numerical-delta-method test with a KS, L1, or L2 functional."""
    return wrap_test("ndm", sample1, sample2, ngrid=ngrid, s=s, resampling=resampling,
                     nboot=nboot, epsilon=epsilon, form=form, quiet=quiet,
                     alpha=alpha, seed=seed)


def set_grid(samples, ngrid):
    """Equally spaced evaluation points over the pooled sample support."""
    return core.set_grid(samples, ngrid).points


def CDF(sample, grid, s=1):
    """Integrated empirical CDF on the grid; rows are handled independently
    when ``sample`` is a matrix of resamples."""
    sample = np.asarray(sample, dtype=float)
    grid = core.as_grid(grid)
    if sample.ndim == 2:
        return np.stack([core.integrated_ecdf(row, grid, s) for row in sample])
    return core.integrated_ecdf(sample, grid, s)


def bootstrap(sample, b, nboot, seed=None):
    """nboot bootstrap resamples of size b, as a value matrix."""
    values = np.asarray(sample, dtype=float)
    seed = core.DEFAULT_SEED if seed is None else seed
    idx = core.bootstrap_indices(values.size, nboot, seed, ndraw=int(b))
    return values[idx]


def paired_bootstrap(sample1, sample2, b, nboot, seed=None):
    """Jointly resampled value matrices; both samples share each index row."""
    v1 = np.asarray(sample1, dtype=float)
    v2 = np.asarray(sample2, dtype=float)
    seed = core.DEFAULT_SEED if seed is None else seed
    idx = core.paired_bootstrap_indices(v1.size, nboot, seed, n2=v2.size)
    if int(b) != v1.size:
        idx = idx[:, : int(b)]
    return v1[idx], v2[idx]


def subsampling(sample, b, nsub=None):
    """Contiguous overlapping blocks of length b (all n-b+1 by default)."""
    values = np.asarray(sample, dtype=float)
    blocks = core.subsample_blocks(values.size, int(b))
    if nsub is not None:
        blocks = blocks[: int(nsub)]
    return np.stack([values[start:stop] for start, stop in blocks])
