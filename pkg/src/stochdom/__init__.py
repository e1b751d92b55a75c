"""stochdom: stochastic dominance testing with resampling-based inference.

Library surface:

  * grids and empirical integrated CDFs (:mod:`stochdom.ecdf`),
  * scalar test functionals (:mod:`stochdom.functionals`),
  * seeded resampling kernels (:mod:`stochdom.resample`),
  * the inference procedures (:mod:`stochdom.procedures`),
  * report rendering and machine records (:mod:`stochdom.reporting`),
  * the CSV command line front end (:mod:`stochdom.cli`).
"""

from .ecdf import (
    Grid,
    Sample,
    WeightSpec,
    as_grid,
    as_sample,
    ecdf_difference,
    integrated_ecdf,
    log_returns,
    set_grid,
    weight_q,
)
from .errors import (
    BadArgument,
    ConfigError,
    DegenerateSupport,
    GroupArity,
    LengthMismatch,
    MissingSubsampleSize,
    NonPositivePrice,
    ParseError,
    StochDomError,
)
from .functionals import (
    ResampledDistribution,
    ScaleFactor,
    ks_statistic,
    l1_statistic,
    l2_statistic,
    minmax_statistic,
    p_value,
    quantile,
)
from .procedures import (
    ContactSet,
    RecenteringCurve,
    ScanResult,
    TestConfig,
    TestResult,
    contact_threshold,
    default_ndm_step,
    maximality_scale,
    recentering_threshold,
    scan_subsample_size,
    test_maximality,
    test_sd,
    test_sd_contact,
    test_sd_ndm,
    test_sd_sr,
)
from .reporting import export_curves, machine_record, parse_machine_record, render_report
from .resample import (
    DEFAULT_SEED,
    METHODS,
    ResamplingPlan,
    bootstrap_indices,
    multiplier_process_curves,
    multiplier_replicates,
    paired_bootstrap_indices,
    pooled_bootstrap_indices,
    subsample_blocks,
    substream,
)

__version__ = "0.1.0"

__all__ = [
    "BadArgument",
    "ConfigError",
    "ContactSet",
    "DEFAULT_SEED",
    "DegenerateSupport",
    "Grid",
    "GroupArity",
    "LengthMismatch",
    "METHODS",
    "MissingSubsampleSize",
    "NonPositivePrice",
    "ParseError",
    "RecenteringCurve",
    "ResampledDistribution",
    "ResamplingPlan",
    "Sample",
    "ScaleFactor",
    "ScanResult",
    "StochDomError",
    "TestConfig",
    "TestResult",
    "WeightSpec",
    "as_grid",
    "as_sample",
    "bootstrap_indices",
    "contact_threshold",
    "default_ndm_step",
    "ecdf_difference",
    "export_curves",
    "integrated_ecdf",
    "ks_statistic",
    "l1_statistic",
    "l2_statistic",
    "log_returns",
    "machine_record",
    "maximality_scale",
    "minmax_statistic",
    "multiplier_process_curves",
    "multiplier_replicates",
    "p_value",
    "paired_bootstrap_indices",
    "parse_machine_record",
    "pooled_bootstrap_indices",
    "quantile",
    "recentering_threshold",
    "render_report",
    "scan_subsample_size",
    "set_grid",
    "subsample_blocks",
    "substream",
    "test_maximality",
    "test_sd",
    "test_sd_contact",
    "test_sd_ndm",
    "test_sd_sr",
    "weight_q",
]
