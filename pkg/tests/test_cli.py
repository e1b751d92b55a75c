"""CSV ingestion, dispatch, report rendering, machine record, and exports."""

import numpy as np
import pytest

import stochdom as sd
from stochdom.cli import InputSpec, build_parser, ingest, main, run
from stochdom.errors import ConfigError, GroupArity, ParseError


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def two_normal_csv(tmp_path, n=80, shift=0.0, seed=21, name="data.csv"):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=n)
    b = rng.normal(shift, 1.0, n)
    rows = "\n".join(f"{float(x)!r},{float(y)!r}" for x, y in zip(a, b))
    return write(tmp_path, name, f"a,b\n{rows}\n"), a, b


# ---------------------------------------------------------------------------
# ingestion


def test_ingest_two_columns(tmp_path):
    path = write(tmp_path, "t.csv", "a,b\n1,2\n3,4\n")
    (s1, s2), notes = ingest(InputSpec(path))
    assert s1.label == "a" and s2.label == "b"
    np.testing.assert_array_equal(s1.values, [1.0, 3.0])
    np.testing.assert_array_equal(s2.values, [2.0, 4.0])
    assert notes == []


def test_ingest_drops_blank_cells_with_note(tmp_path):
    path = write(tmp_path, "t.csv", "a,b\n1,2\n,4\n3,nan\n5,6\n")
    (s1, s2), notes = ingest(InputSpec(path))
    np.testing.assert_array_equal(s1.values, [1.0, 3.0, 5.0])
    np.testing.assert_array_equal(s2.values, [2.0, 4.0, 6.0])
    assert len(notes) == 2


def test_ingest_long_format_switch(tmp_path):
    path = write(tmp_path, "t.csv", "value,group\n1,0\n2,1\n3,0\n4,1\n")
    (s1, s2), _ = ingest(InputSpec(path, by="group"))
    assert (s1.label, s2.label) == ("0", "1")
    np.testing.assert_array_equal(s1.values, [1.0, 3.0])
    (s1, s2), _ = ingest(InputSpec(path, by="group", switch=True))
    assert (s1.label, s2.label) == ("1", "0")
    np.testing.assert_array_equal(s1.values, [2.0, 4.0])


def test_ingest_switch_twice_is_identity(tmp_path):
    path = write(tmp_path, "t.csv", "a,b\n1,2\n3,4\n")
    plain, _ = ingest(InputSpec(path))
    switched, _ = ingest(InputSpec(path, switch=True))
    assert (switched[1].label, switched[0].label) == (plain[0].label, plain[1].label)
    np.testing.assert_array_equal(switched[::-1][0].values, plain[0].values)


def test_ingest_group_arity(tmp_path):
    path = write(tmp_path, "t.csv", "value,group\n1,0\n2,1\n3,2\n4,0\n")
    with pytest.raises(GroupArity):
        ingest(InputSpec(path, by="group"))


def test_ingest_parse_error_location(tmp_path):
    path = write(tmp_path, "t.csv", "a,b\n1,2\n3,oops\n")
    with pytest.raises(ParseError, match="line 3"):
        ingest(InputSpec(path))


def test_ingest_rejects_infinite_cell(tmp_path):
    path = write(tmp_path, "t.csv", "a,b\n1,2\ninf,4\n")
    with pytest.raises(ParseError):
        ingest(InputSpec(path))


def test_ingest_two_files(tmp_path):
    p1 = write(tmp_path, "x.csv", "x\n1\n2\n3\n")
    p2 = write(tmp_path, "y.csv", "y\n4\n5\n")
    (s1, s2), _ = ingest(InputSpec(p1, path2=p2))
    assert (s1.label, s2.label) == ("x", "y")
    assert s1.n == 3 and s2.n == 2


def test_ingest_prices(tmp_path):
    p1 = write(tmp_path, "x.csv", "p,q\n100,100\n110,100\n121,100\n")
    (s1, s2), _ = ingest(InputSpec(p1, returns_from_prices=True))
    np.testing.assert_allclose(s1.values, np.log([1.1, 1.1]), rtol=1e-12)
    np.testing.assert_array_equal(s2.values, [0.0, 0.0])


# ---------------------------------------------------------------------------
# flag validation and dispatch


def parse(argv):
    return build_parser().parse_args(argv)


def test_run_defaults(tmp_path):
    path, _, _ = two_normal_csv(tmp_path)
    bundle = run(parse(["--input", path]))
    cfg = bundle.result.config
    assert bundle.result.procedure == "lfc"
    assert cfg.s == 1 and cfg.ngrid == 100 and cfg.alpha == 0.05
    assert cfg.plan.method == "recentered_bootstrap"
    assert cfg.plan.nboot == 200
    assert cfg.plan.seed == sd.DEFAULT_SEED
    assert "* H0 : a first order SD b" in bundle.report


def test_run_contact_defaults(tmp_path):
    path, _, _ = two_normal_csv(tmp_path)
    bundle = run(parse(["--input", path, "--approach", "contact"]))
    assert bundle.result.procedure == "contact"
    assert bundle.result.config.c == 0.75


def test_run_subsampling_requires_b1(tmp_path):
    path, _, _ = two_normal_csv(tmp_path)
    with pytest.raises(ConfigError, match="--b1"):
        run(parse(["--input", path, "--resampling", "subsampling"]))


def test_run_rejects_orphan_b1(tmp_path):
    path, _, _ = two_normal_csv(tmp_path)
    with pytest.raises(ConfigError, match="--b1/--b2"):
        run(parse(["--input", path, "--b1", "20"]))


def test_run_rejects_contact_subsampling(tmp_path):
    path, _, _ = two_normal_csv(tmp_path)
    with pytest.raises(ConfigError):
        run(parse(["--input", path, "--approach", "contact", "--resampling", "subsampling",
                   "--b1", "20", "--b2", "20"]))


def test_run_rejects_by_with_input2(tmp_path):
    path, _, _ = two_normal_csv(tmp_path)
    with pytest.raises(ConfigError):
        run(parse(["--input", path, "--input2", path, "--by", "g"]))


def test_switch_flag_reverses_h0(tmp_path):
    path, _, _ = two_normal_csv(tmp_path)
    bundle = run(parse(["--input", path, "--switch", "--nboot", "30"]))
    assert "* H0 : b first order SD a" in bundle.report


def test_higher_order_wording(tmp_path):
    path, _, _ = two_normal_csv(tmp_path)
    bundle = run(parse(["--input", path, "--s", "2", "--nboot", "20"]))
    assert "second order SD" in bundle.report


# ---------------------------------------------------------------------------
# machine record and curves


def test_machine_record_roundtrip_all_approaches(tmp_path):
    path, _, _ = two_normal_csv(tmp_path, n=60)
    cases = [
        ["--nboot", "40"],
        ["--approach", "contact", "--nboot", "40"],
        ["--approach", "sr", "--nboot", "40"],
        ["--approach", "ndm", "--functional", "l2", "--nboot", "40"],
        ["--resampling", "subsampling", "--b1", "20", "--b2", "20"],
        ["--resampling", "multiplier", "--nboot", "40"],
    ]
    for extra in cases:
        bundle = run(parse(["--input", path, *extra]))
        back = sd.parse_machine_record(bundle.record)
        assert back.statistic == bundle.result.statistic
        assert back.critical_value == bundle.result.critical_value
        assert back.p_value == bundle.result.p_value
        assert back.config == bundle.result.config
        assert back.labels == bundle.result.labels
        assert back.sizes == bundle.result.sizes
        assert back.detail == bundle.result.detail
        np.testing.assert_array_equal(back.grid.points, bundle.result.grid.points)
        assert back.grid.spacing == bundle.result.grid.spacing
        for c0, c1 in zip(back.curves, bundle.result.curves):
            np.testing.assert_array_equal(c0, c1)
        np.testing.assert_array_equal(back.difference, bundle.result.difference)
        np.testing.assert_array_equal(back.resampled.values, bundle.result.resampled.values)
        if bundle.result.contact is not None:
            np.testing.assert_array_equal(back.contact.member, bundle.result.contact.member)
        if bundle.result.recentering is not None:
            np.testing.assert_array_equal(
                back.recentering.values, bundle.result.recentering.values
            )
        # regenerating the record from the parsed result is byte-identical
        assert sd.machine_record(back) == bundle.record


def test_machine_record_byte_identical_across_runs(tmp_path):
    path, _, _ = two_normal_csv(tmp_path)
    argv = ["--input", path, "--approach", "sr", "--nboot", "50", "--seed", "99"]
    first = run(parse(argv)).record
    second = run(parse(argv)).record
    assert first.encode() == second.encode()


def test_curve_export_roundtrip(tmp_path):
    path, _, _ = two_normal_csv(tmp_path, n=50)
    out = tmp_path / "curves.csv"
    bundle = run(parse(["--input", path, "--nboot", "20"]))
    sd.export_curves(bundle.result, out)
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "grid,F1,F2,D"
    assert len(rows) - 1 == bundle.result.config.ngrid
    data = np.array([[float(tok) for tok in row.split(",")] for row in rows[1:]])
    scale = sd.ScaleFactor.from_sizes(*bundle.result.sizes)
    assert scale.lam * data[:, 3].max() == bundle.result.statistic
    np.testing.assert_array_equal(data[:, 3], bundle.result.difference)


def test_curve_export_identical_samples(tmp_path):
    rng = np.random.default_rng(5)
    a = rng.normal(size=30)
    rows = "\n".join(f"{float(x)!r},{float(x)!r}" for x in a)
    path = write(tmp_path, "same.csv", f"a,b\n{rows}\n")
    out = tmp_path / "curves.csv"
    assert main(["--input", path, "--nboot", "10", "--curves-out", str(out)]) == 0
    data = np.array([[float(tok) for tok in row.split(",")]
                     for row in out.read_text().strip().splitlines()[1:]])
    np.testing.assert_array_equal(data[:, 3], np.zeros(100))


# ---------------------------------------------------------------------------
# process exit codes


def test_main_success_and_outputs(tmp_path, capsys):
    path, _, _ = two_normal_csv(tmp_path)
    record = tmp_path / "record.txt"
    code = main(["--input", path, "--nboot", "30", "--machine-out", str(record)])
    out = capsys.readouterr().out
    assert code == 0
    assert "*** Test Result ***" in out
    assert record.exists()


def test_main_exit_nonzero_on_config_error(tmp_path, capsys):
    path, _, _ = two_normal_csv(tmp_path)
    code = main(["--input", path, "--resampling", "subsampling"])
    err = capsys.readouterr().err
    assert code == 2
    assert "error:" in err


def test_main_exit_nonzero_on_parse_error(tmp_path, capsys):
    path = write(tmp_path, "bad.csv", "a,b\n1,x\n")
    code = main(["--input", path])
    assert code == 2
    assert "error:" in capsys.readouterr().err
