"""Report rendering, machine-readable result records, and curve export.

The machine record is a flat ``key = value`` text document with embedded
comma-joined arrays.  Every float is written with ``repr`` (shortest exact
round trip), so parsing a record reconstructs the numerical content of the
TestResult bit-for-bit, and two runs with the same inputs, flags, and seed
produce byte-identical records.  Wall-clock time is deliberately not part of
the record.
"""

import numpy as np

from .ecdf import Grid, WeightSpec, weight_q
from .errors import BadArgument, ParseError
from .functionals import ResampledDistribution
from .procedures import ContactSet, RecenteringCurve, TestConfig, TestResult
from .resample import ResamplingPlan

RECORD_FORMAT = "stochdom-record-v1"

_ORDINALS = {1: "first", 2: "second", 3: "third"}

_PROCEDURE_TITLES = {
    "contact": "Contact Set Approach",
    "sr": "Selective Recentering Approach",
    "ndm": "Numerical Delta Method",
}


def order_name(s: int) -> str:
    return _ORDINALS.get(int(s), f"{int(s)}th")


def null_hypothesis_line(result: TestResult) -> str:
    order = order_name(result.config.s)
    if result.procedure == "maximality":
        return f"* H0 : at least one prospect {order} order SD another"
    return f"* H0 : {result.labels[0]} {order} order SD {result.labels[1]}"


def render_report(result: TestResult) -> str:
    """Human-readable block report for a test result."""
    cfg = result.config
    lines = [
        "#--- Testing for Stochastic Dominance  -----#",
        "",
        null_hypothesis_line(result),
    ]
    if result.procedure in _PROCEDURE_TITLES:
        lines.append(f"* {_PROCEDURE_TITLES[result.procedure]}")
    if result.procedure == "ndm":
        lines.append(f"* {cfg.functional.upper()} Type Test Statistic")
    lines += ["", "#-------------------------------------------#", "", "*** Test Setting ***"]
    lines.append(f"* Resampling method         = {result.resampled.method}")
    lines.append(f"* SD order                  = {cfg.s:6d}")
    for label, n in zip(result.labels, result.sizes):
        lines.append(f"* # of ({label})".ljust(28) + f"= {n:6d}")
    if result.resampled.method == "subsampling":
        lines.append(f"* # of (subsample1)         = {int(result.detail['b1']):6d}")
        lines.append(f"* # of (subsample2)         = {int(result.detail['b2']):6d}")
    else:
        lines.append(f"* # of bootstrapping        = {cfg.plan.nboot:6d}")
    lines.append(f"* # of grid points          = {cfg.ngrid:6d}")
    lines.append(f"* Seed                      = {cfg.plan.seed}")

    tuning = []
    if result.procedure == "contact":
        tuning.append(f"* c                         = {cfg.c:.4f}")
    elif result.procedure == "sr":
        tuning.append(f"* a                         = {cfg.a:.4f}")
        tuning.append(f"* eta                       = {cfg.eta:.6f}")
    elif result.procedure == "ndm":
        tuning.append(f"* epsilon                   = {result.detail['epsilon']:.4f}")
    if tuning:
        lines += ["", "# Tuning parameters -------"] + tuning

    lines += [
        "",
        "#-------------------------------------------#",
        "",
        "*** Test Result ***",
        f"* Test statistic            = {result.statistic:.4f}",
        f"* Significance level        = {cfg.alpha:5.2f}",
        f"* Critical-value            = {result.critical_value:.4f}",
        f"* P-value                   = {result.p_value:.4f}",
        f"* Time elapsed              = {result.elapsed:5.2f} Sec",
        "",
    ]
    return "\n".join(lines)


def _fmt(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _fmt_array(arr) -> str:
    return ",".join(repr(float(v)) for v in np.asarray(arr, dtype=float))


def machine_record(result: TestResult) -> str:
    """Serialize a TestResult as a flat key-value document (elapsed excluded)."""
    cfg = result.config
    plan = cfg.plan
    k = len(result.curves)
    pairs = [
        ("format", RECORD_FORMAT),
        ("procedure", result.procedure),
        ("approach", cfg.approach),
        ("method", plan.method),
        ("s", cfg.s),
        ("ngrid", cfg.ngrid),
        ("alpha", float(cfg.alpha)),
        ("nboot", plan.nboot),
        ("b1", plan.b1),
        ("b2", plan.b2),
        ("seed", plan.seed),
        ("functional", cfg.functional),
        ("c", float(cfg.c)),
        ("a", float(cfg.a)),
        ("eta", float(cfg.eta)),
        ("epsilon", None if cfg.epsilon is None else float(cfg.epsilon)),
        ("ndm_symmetric", cfg.ndm_symmetric),
        (
            "weight",
            None
            if cfg.weight is None
            else ",".join(
                [repr(float(cfg.weight.z1)), repr(float(cfg.weight.z2)), repr(float(cfg.weight.a)), repr(float(cfg.weight.delta)), _fmt(cfg.weight.enabled)]
            ),
        ),
        ("k", k),
    ]
    for j, (label, n) in enumerate(zip(result.labels, result.sizes), start=1):
        pairs += [(f"label{j}", label), (f"n{j}", n)]
    pairs += [
        ("statistic", float(result.statistic)),
        ("critical_value", float(result.critical_value)),
        ("p_value", float(result.p_value)),
    ]
    for key in sorted(result.detail):
        pairs.append((f"detail.{key}", float(result.detail[key])))
    pairs.append(("grid", _fmt_array(result.grid.points)))
    for j in range(k):
        pairs.append((f"curve{j + 1}", _fmt_array(result.curves[j])))
    if result.difference is not None:
        pairs.append(("difference", _fmt_array(result.difference)))
    pairs.append(("resampled", _fmt_array(result.resampled.values)))
    return "\n".join(f"{key} = {_fmt(val)}" for key, val in pairs) + "\n"


def _parse_scalar(text: str):
    if text == "none":
        return None
    if text in ("true", "false"):
        return text == "true"
    return float(text)


def _parse_array(text: str) -> np.ndarray:
    return np.array([float(tok) for tok in text.split(",")], dtype=float)


def parse_machine_record(text: str) -> TestResult:
    """Rebuild the TestResult a machine record was written from (elapsed = 0)."""
    fields = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if " = " not in line:
            raise ParseError(f"machine record line {lineno} is not 'key = value': {line!r}")
        key, value = line.split(" = ", 1)
        fields[key] = value
    if fields.get("format") != RECORD_FORMAT:
        raise ParseError(f"unsupported record format {fields.get('format')!r}")

    weight = None
    if fields["weight"] != "none":
        z1, z2, a, delta, enabled = fields["weight"].split(",")
        weight = WeightSpec(float(z1), float(z2), float(a), float(delta), enabled == "true")
    plan = ResamplingPlan(
        method=fields["method"],
        nboot=int(fields["nboot"]),
        b1=None if fields["b1"] == "none" else int(fields["b1"]),
        b2=None if fields["b2"] == "none" else int(fields["b2"]),
        seed=int(fields["seed"]),
    )
    config = TestConfig(
        s=int(fields["s"]),
        ngrid=int(fields["ngrid"]),
        alpha=float(fields["alpha"]),
        plan=plan,
        approach=fields["approach"],
        functional=fields["functional"],
        c=float(fields["c"]),
        a=float(fields["a"]),
        eta=float(fields["eta"]),
        epsilon=_parse_scalar(fields["epsilon"]),
        ndm_symmetric=fields["ndm_symmetric"] == "true",
        weight=weight,
    )

    k = int(fields["k"])
    labels = tuple(fields[f"label{j + 1}"] for j in range(k))
    sizes = tuple(int(fields[f"n{j + 1}"]) for j in range(k))
    points = _parse_array(fields["grid"])
    grid = Grid(points, float((points[-1] - points[0]) / (points.size - 1)))
    curves = tuple(_parse_array(fields[f"curve{j + 1}"]) for j in range(k))
    difference = _parse_array(fields["difference"]) if "difference" in fields else None
    detail = {key[len("detail.") :]: float(val) for key, val in fields.items() if key.startswith("detail.")}

    procedure = fields["procedure"]
    contact = None
    recentering = None
    if procedure == "contact":
        q = weight_q(grid, config.s, config.weight)
        contact = ContactSet((q * np.abs(difference)) < detail["c_N"], detail["c_N"])
    elif procedure == "sr":
        threshold = detail["recenter_threshold"]
        recentering = RecenteringCurve(np.where(difference < threshold, difference, 0.0), threshold)

    return TestResult(
        procedure=procedure,
        statistic=float(fields["statistic"]),
        critical_value=float(fields["critical_value"]),
        p_value=float(fields["p_value"]),
        resampled=ResampledDistribution(_parse_array(fields["resampled"]), fields["method"]),
        grid=grid,
        curves=curves,
        difference=difference,
        labels=labels,
        sizes=sizes,
        config=config,
        detail=detail,
        contact=contact,
        recentering=recentering,
        elapsed=0.0,
    )


def export_curves(result: TestResult, path) -> None:
    """Write grid, both integrated ECDFs, and their difference as CSV.

    One row per grid point, header ``grid,F1,F2,D``, full double precision.
    """
    if result.difference is None or len(result.curves) != 2:
        raise BadArgument("curve export needs a pairwise result with two curves")
    F1, F2 = result.curves
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("grid,F1,F2,D\n")
        for g, f1, f2, d in zip(result.grid.points, F1, F2, result.difference):
            fh.write(f"{float(g)!r},{float(f1)!r},{float(f2)!r},{float(d)!r}\n")
