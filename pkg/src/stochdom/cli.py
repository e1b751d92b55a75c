"""CSV-driven command line front end.

Two ways to feed the tester:

  * two-column mode: ``--input data.csv`` takes the first two columns of one
    file (or ``--input a.csv --input2 b.csv`` the first column of each);
  * long format: ``--input data.csv --by group`` splits the first non-group
    column by a binary group column.

Blank and NaN cells are dropped per column (with a count reported);
``--prices`` converts each ingested series to log returns first.  The process
exits 0 whenever the test ran, regardless of the decision, and nonzero only
on errors.
"""

import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from .ecdf import Sample, log_returns
from .errors import ConfigError, GroupArity, ParseError, StochDomError
from .procedures import TestConfig, TestResult, test_sd, test_sd_contact, test_sd_ndm, test_sd_sr
from .reporting import export_curves, machine_record, render_report
from .resample import (
    DEFAULT_SEED,
    METHOD_MULTIPLIER,
    METHOD_PAIRED,
    METHOD_POOLED,
    METHOD_RECENTERED,
    METHOD_SUBSAMPLING,
    ResamplingPlan,
)

RESAMPLING_NAMES = {
    "bootstrap": METHOD_RECENTERED,
    "pooled": METHOD_POOLED,
    "paired": METHOD_PAIRED,
    "subsampling": METHOD_SUBSAMPLING,
    "multiplier": METHOD_MULTIPLIER,
}

_PROCEDURES = {
    "lfc": test_sd,
    "contact": test_sd_contact,
    "sr": test_sd_sr,
    "ndm": test_sd_ndm,
}

_MISSING_TOKENS = {"", "nan", "na", "none", "null"}


@dataclass(frozen=True)
class InputSpec:
    """Where the two samples come from and how to transform them."""

    path: str
    path2: str | None = None
    by: str | None = None
    switch: bool = False
    returns_from_prices: bool = False


@dataclass(frozen=True)
class ReportBundle:
    """Everything one CLI run produces."""

    report: str
    record: str
    result: TestResult
    notes: tuple


def _read_table(path: str) -> tuple[list[str], list[list[str]]]:
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            rows = [row for row in reader]
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise ParseError(f"{path} is empty; a header row is required")
    header = [name.strip() for name in rows[0]]
    if len(header) < 1 or any(not name for name in header):
        raise ParseError(f"{path} has a malformed header row")
    return header, rows[1:]


def _numeric_column(path: str, header: list[str], rows: list[list[str]], col: int) -> tuple[np.ndarray, int]:
    values = []
    dropped = 0
    for i, row in enumerate(rows, start=2):  # 1-based file lines, header is line 1
        cell = row[col].strip() if col < len(row) else ""
        if cell.lower() in _MISSING_TOKENS:
            dropped += 1
            continue
        try:
            value = float(cell)
        except ValueError:
            raise ParseError(f"{path}: line {i}, column {header[col]!r}: cannot parse {cell!r}") from None
        if not np.isfinite(value):
            raise ParseError(f"{path}: line {i}, column {header[col]!r}: non-finite value {cell!r}")
        values.append(value)
    return np.asarray(values, dtype=float), dropped


def ingest(spec: InputSpec) -> tuple[tuple[Sample, Sample], list[str]]:
    """Load the two samples an InputSpec describes; returns (samples, notes)."""
    notes = []
    header, rows = _read_table(spec.path)

    if spec.by is not None:
        if spec.by not in header:
            raise ConfigError(f"--by column {spec.by!r} not found in {spec.path}")
        group_col = header.index(spec.by)
        value_cols = [j for j in range(len(header)) if j != group_col]
        if not value_cols:
            raise ParseError(f"{spec.path} has no value column besides {spec.by!r}")
        value_col = value_cols[0]
        groups: dict[str, list[float]] = {}
        dropped = 0
        for i, row in enumerate(rows, start=2):
            level = row[group_col].strip() if group_col < len(row) else ""
            cell = row[value_col].strip() if value_col < len(row) else ""
            if cell.lower() in _MISSING_TOKENS or level == "":
                dropped += 1
                continue
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(
                    f"{spec.path}: line {i}, column {header[value_col]!r}: cannot parse {cell!r}"
                ) from None
            if not np.isfinite(value):
                raise ParseError(f"{spec.path}: line {i}, column {header[value_col]!r}: non-finite value")
            groups.setdefault(level, []).append(value)
        if len(groups) != 2:
            raise GroupArity(
                f"--by column {spec.by!r} has {len(groups)} level(s) {sorted(groups)}; exactly 2 required"
            )
        if dropped:
            notes.append(f"dropped {dropped} blank/NaN row(s) from {spec.path}")
        levels = sorted(groups)
        raw = [(str(level), np.asarray(groups[level], dtype=float)) for level in levels]
    elif spec.path2 is not None:
        header2, rows2 = _read_table(spec.path2)
        v1, d1 = _numeric_column(spec.path, header, rows, 0)
        v2, d2 = _numeric_column(spec.path2, header2, rows2, 0)
        for dropped, path in ((d1, spec.path), (d2, spec.path2)):
            if dropped:
                notes.append(f"dropped {dropped} blank/NaN cell(s) from {path}")
        raw = [(header[0], v1), (header2[0], v2)]
    else:
        if len(header) < 2:
            raise ConfigError(f"{spec.path} needs two columns (or use --by / --input2)")
        v1, d1 = _numeric_column(spec.path, header, rows, 0)
        v2, d2 = _numeric_column(spec.path, header, rows, 1)
        for dropped, name in ((d1, header[0]), (d2, header[1])):
            if dropped:
                notes.append(f"dropped {dropped} blank/NaN cell(s) from column {name!r}")
        raw = [(header[0], v1), (header[1], v2)]

    if spec.returns_from_prices:
        raw = [(label, log_returns(values)) for label, values in raw]
    if spec.switch:
        raw = raw[::-1]
    samples = tuple(Sample(values, label) for label, values in raw)
    return samples, notes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stochdom",
        description="Test stochastic dominance between two samples read from CSV.",
    )
    parser.add_argument("--input", required=True, help="CSV file (two columns, or one with --by/--input2)")
    parser.add_argument("--input2", default=None, help="optional second CSV providing sample2")
    parser.add_argument("--by", default=None, help="binary group column splitting a long-format file")
    parser.add_argument("--switch", action="store_true", help="reverse the order of the two samples")
    parser.add_argument("--prices", action="store_true", help="treat inputs as prices; test their log returns")
    parser.add_argument("--s", type=int, default=1, help="stochastic dominance order (default 1)")
    parser.add_argument("--ngrid", type=int, default=100, help="number of grid points (default 100)")
    parser.add_argument("--resampling", default="bootstrap", choices=sorted(RESAMPLING_NAMES),
                        help="resampling method (default bootstrap = recentered)")
    parser.add_argument("--approach", default="lfc", choices=sorted(_PROCEDURES),
                        help="inference procedure (default lfc)")
    parser.add_argument("--functional", default="l1", choices=["ks", "l1", "l2"],
                        help="functional for the ndm approach (default l1)")
    parser.add_argument("--b1", type=int, default=None, help="subsample size for sample1")
    parser.add_argument("--b2", type=int, default=None, help="subsample size for sample2")
    parser.add_argument("--nboot", type=int, default=200, help="number of bootstrap draws (default 200)")
    parser.add_argument("--c", type=float, default=0.75, help="contact-set tuning constant (default 0.75)")
    parser.add_argument("--a", type=float, default=0.1, help="selective-recentering constant (default 0.1)")
    parser.add_argument("--eta", type=float, default=1e-6, help="critical-value floor for sr (default 1e-6)")
    parser.add_argument("--epsilon", type=float, default=None,
                        help="ndm step size (default lambda^(-1/16))")
    parser.add_argument("--alpha", type=float, default=0.05, help="significance level (default 0.05)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"resampling seed (default {DEFAULT_SEED})")
    parser.add_argument("--curves-out", default=None, help="write grid/F1/F2/D curves to this CSV")
    parser.add_argument("--machine-out", default=None, help="write the machine-readable record here")
    return parser


def _validate_flags(args) -> None:
    method = RESAMPLING_NAMES[args.resampling]
    if method == METHOD_SUBSAMPLING:
        if args.b1 is None:
            raise ConfigError("--resampling subsampling requires --b1")
        if args.b2 is None:
            raise ConfigError("--resampling subsampling requires --b2")
        if args.approach != "lfc":
            raise ConfigError(f"--approach {args.approach} requires a bootstrap-family --resampling")
    elif args.b1 is not None or args.b2 is not None:
        raise ConfigError("--b1/--b2 are only meaningful with --resampling subsampling")
    if args.by is not None and args.input2 is not None:
        raise ConfigError("--by and --input2 cannot be combined")


def run(args) -> ReportBundle:
    """Ingest, dispatch to the configured procedure, and render the outputs."""
    _validate_flags(args)
    spec = InputSpec(
        path=args.input,
        path2=args.input2,
        by=args.by,
        switch=args.switch,
        returns_from_prices=args.prices,
    )
    (sample1, sample2), notes = ingest(spec)
    plan = ResamplingPlan(
        method=RESAMPLING_NAMES[args.resampling],
        nboot=args.nboot,
        b1=args.b1,
        b2=args.b2,
        seed=args.seed,
    )
    config = TestConfig(
        s=args.s,
        ngrid=args.ngrid,
        alpha=args.alpha,
        plan=plan,
        approach=args.approach,
        functional=args.functional,
        c=args.c,
        a=args.a,
        eta=args.eta,
        epsilon=args.epsilon,
    )
    result = _PROCEDURES[args.approach](sample1, sample2, config)
    return ReportBundle(
        report=render_report(result),
        record=machine_record(result),
        result=result,
        notes=tuple(notes),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        bundle = run(args)
    except StochDomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for note in bundle.notes:
        print(f"# {note}")
    print(bundle.report)
    try:
        if args.machine_out:
            with open(args.machine_out, "w", encoding="utf-8") as fh:
                fh.write(bundle.record)
        if args.curves_out:
            export_curves(bundle.result, args.curves_out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
