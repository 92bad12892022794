import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from hurwitz_zeros import generate_bernoulli, bernoulli_census
from hurwitz_zeros.cli import main
from hurwitz_zeros.locus import LOCUS_HEADER, ZERO_HEADER


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -------------------------------------------------------------------- eval


def test_eval_sigma_zero(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "0", "--a", "0.25")
    assert code == 0
    assert "value: 0.25\n" in out


def test_eval_trivial_zero(capsys):
    code, out, _ = run(capsys, "--format", "json", "eval", "--sigma", "-2", "--a", "1")
    obj = json.loads(out)
    assert code == 0 and obj["sign"] == 0 and float(obj["value"]) == 0


def test_eval_pole_is_domain_error(capsys):
    code, _, err = run(capsys, "eval", "--sigma", "1", "--a", "1")
    assert code == 2 and "pole" in err


def test_eval_accepts_rational_a(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "-3", "--a", "1/2", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(out)))
    assert code == 0 and row["a"] == "1/2"
    assert abs(float(row["value"]) + 7 / 960) < 1e-15


def test_eval_bad_precision(capsys):
    code, _, _ = run(capsys, "--precision-bits", "8", "eval", "--sigma", "-3", "--a", "1")
    assert code == 2


def test_eval_indeterminate_exits_4(capsys):
    # a zero lies far closer to 5/8 than 1024 bits can resolve
    code, out, _ = run(capsys, "eval", "--sigma", "-2000.5", "--a", "5/8")
    assert code == 4 and "determinate: False" in out


def test_usage_error(capsys):
    code, _, _ = run(capsys, "eval", "--sigma", "x", "--a", "1")
    assert code == 2


# ---------------------------------------------------------------- bernoulli


def test_bernoulli_printed_forms(capsys):
    assert run(capsys, "bernoulli", "--n", "2")[1] == "a^2 - a + 1/6\n"
    assert run(capsys, "bernoulli", "--n", "0")[1] == "1\n"


def test_bernoulli_cubic_roots(capsys):
    code, out, _ = run(capsys, "bernoulli", "--n", "3", "--roots")
    lines = out.splitlines()
    assert code == 0 and lines[2:] == ["0", "1/2", "1"]


def test_bernoulli_json_round_trip(capsys):
    from hurwitz_zeros import RationalPolynomial

    code, out, _ = run(capsys, "--format", "json", "bernoulli", "--n", "9", "--roots")
    obj = json.loads(out)
    assert RationalPolynomial.from_json(json.dumps({"n": obj["n"], "coeffs": obj["coeffs"]})) == generate_bernoulli(9)
    for lo, hi in obj["roots"]["intervals"]:
        assert F(lo) < F(hi)
    assert obj["roots"]["count"] == bernoulli_census(9).N


def test_bernoulli_negative_n(capsys):
    assert run(capsys, "bernoulli", "--n", "-1")[0] == 2


# ------------------------------------------------------------------- census


def test_census_20_matches_sturm(capsys):
    code, out, _ = run(capsys, "--format", "csv", "census", "--p", "20")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert tuple(csv.reader(io.StringIO(out)).__next__()) == ZERO_HEADER
    assert len(rows) == bernoulli_census(21).positive_count
    for r in rows:
        F(r["lattice_point"])  # exact rational text


def test_census_200_flags(capsys):
    code, out, _ = run(capsys, "--format", "json", "census", "--p", "200")
    obj = json.loads(out)
    assert code == 0 and all(obj["bound_checks"].values())
    assert obj["N"] == len(obj["zeros"])


def test_census_small_p_redirects(capsys):
    code, _, err = run(capsys, "census", "--p", "5")
    assert code == 2 and "bernoulli --n 6 --roots" in err


def test_census_text_has_table_and_csv(capsys):
    code, out, _ = run(capsys, "census", "--p", "30")
    assert "N(p) = " in out and ",".join(ZERO_HEADER) in out


# -------------------------------------------------------------------- locus


def test_locus_empty_grid(capsys):
    code, out, _ = run(capsys, "locus", "--sigma-min", "-40", "--sigma-max", "-40", "--sigma-step", "1")
    assert code == 0 and out == ",".join(LOCUS_HEADER) + "\n"


def test_locus_domain(capsys):
    code, _, _ = run(capsys, "locus", "--sigma-min", "-40", "--sigma-max", "-5", "--sigma-step", "1")
    assert code == 2


def test_locus_csv_deterministic_with_manifest(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for path, jobs in zip(paths, ("1", "2")):
        code = main(["locus", "--sigma-min", "-50", "--sigma-max", "-30", "--sigma-step", "10",
                     "--jobs", jobs, "--out", str(path)])
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    header = paths[0].read_text().splitlines()[0]
    assert header == ",".join(LOCUS_HEADER)
    manifest = json.loads((tmp_path / "a.csv.manifest.json").read_text())
    assert manifest["data_file"] == str(paths[0])
    assert manifest["command"][1] == "locus"
    assert set(manifest["per_p_seconds"]) == {"50", "40", "30"}
    for key in ("config", "tool_version", "wall_time_seconds", "python"):
        assert key in manifest


def test_locus_json_rows(capsys):
    code, out, _ = run(capsys, "--format", "json", "locus", "--sigma-min", "-30", "--sigma-max", "-20",
                       "--sigma-step", "10")
    obj = json.loads(out)
    assert code == 0 and obj["failures"] == []
    sigmas = {r["sigma"] for r in obj["rows"]}
    assert sigmas == {"-30", "-20"}
    for r in obj["rows"]:
        assert -1 <= float(r["line_residual"]) <= 1


# ------------------------------------------------------------------- verify


def test_verify_inequalities(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "inequalities", "--p-max", "12", "--n-max", "30")
    assert code == 0 and "suite inequalities" in out


def test_verify_oracle_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "--suite", "oracle", "--p-min", "5", "--p-max", "8")
    assert code == 0 and json.loads(out)["passed"] is True


def test_verify_inkeri_small_range(capsys):
    code, out, _ = run(capsys, "--format", "csv", "verify", "--suite", "inkeri", "--m-min", "50", "--m-max", "60")
    assert code == 0 and out.startswith("suite,case,passed,asserted,detail")


def test_verify_failure_exits_3(capsys, monkeypatch):
    from hurwitz_zeros import cli, verify

    def failing(name, **params):
        rep = verify.SuiteReport(name)
        rep.add("forced", False, "injected failure")
        return rep

    monkeypatch.setattr(cli, "run_suite", failing)
    code, out, _ = run(capsys, "verify", "--suite", "theorem1")
    assert code == 3 and "FAIL  forced" in out


def test_census_bound_failure_exits_3(capsys, monkeypatch):
    from hurwitz_zeros import cli, zeros

    real = zeros.census

    def broken(*a, **k):
        c = real(*a, **k)
        return zeros.ZeroCensus(c.p, c.zeros, {**c.bound_checks, "N_upper": False})

    monkeypatch.setattr(cli, "census", broken)
    code, out, _ = run(capsys, "census", "--p", "20")
    assert code == 3 and "FAIL  N_upper" in out


def test_precision_exhaustion_exits_4(capsys, monkeypatch):
    from hurwitz_zeros import cli
    from hurwitz_zeros.errors import PrecisionExhausted

    def stuck(*a, **k):
        raise PrecisionExhausted("undecided", location=(20, 0.5))

    monkeypatch.setattr(cli, "census", stuck)
    assert run(capsys, "census", "--p", "20")[0] == 4


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "hurwitz_zeros", "bernoulli", "--n", "2"],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "a^2 - a + 1/6\n"
