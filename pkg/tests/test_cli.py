import csv
import io
import json
import math

import pytest

from fhtoeplitz import cli
from fhtoeplitz.special import barnes_g


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line]


def csv_rows(text):
    lines = text.splitlines()
    assert lines[0] == cli.CSV_TAG
    return list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))


def test_barnes(capsys):
    code, out, _ = run(capsys, "barnes", "--z", "0.5,0")
    assert code == 0
    (rec,) = json_lines(out)
    assert abs(rec["G"]["re"] - 0.6032442812) < 1e-10
    assert rec["G"]["im"] == 0


def test_barnes_roundtrip_full_precision(capsys):
    _, out, _ = run(capsys, "barnes", "--z", "1.3,0.7")
    (rec,) = json_lines(out)
    g = barnes_g(complex(1.3, 0.7))
    assert complex(rec["G"]["re"], rec["G"]["im"]) == g


def test_reps_two_minimal(capsys):
    code, out, _ = run(capsys, "reps", "--symbol", "jump", "--alpha", "3.14159265", "--xr", "2.0")
    assert code == 0
    (reps,) = json_lines(out)
    minimal = [r for r in reps if r["minimal"]]
    assert len(minimal) == 2
    betas = sorted(round(r["betas"][0]["re"], 6) for r in minimal)
    assert betas == [-0.5, 0.5]


def test_reps_generic_one_minimal(capsys):
    _, out, _ = run(capsys, "reps", "--symbol", "jump", "--alpha", "1.884", "--xr", "1.884")
    (reps,) = json_lines(out)
    assert sum(r["minimal"] for r in reps) == 1


def test_exact(capsys):
    code, out, _ = run(capsys, "exact", "--symbol", "jump", "--alpha", "1.5707963267948966",
                       "--xr", "3.141592653589793", "--n", "1")
    assert code == 0
    (rec,) = json_lines(out)
    expected = 1 + (1j - 1) * 0.5
    assert abs(complex(rec["det"]["re"], rec["det"]["im"]) - expected) < 1e-12
    assert rec["method"] == "gauss"


def test_asymptote_szego(capsys):
    _, out, _ = run(capsys, "asymptote", "--symbol", "szego", "--t", "0.5", "--n", "10,20")
    recs = json_lines(out)
    assert [r["N"] for r in recs] == [10, 20]
    for r in recs:
        assert abs(r["D"]["re"] - math.exp(0.0625)) < 1e-12
        assert len(r["representations"]) == 1


def test_compare_identity(capsys):
    code, out, _ = run(capsys, "compare", "--symbol", "identity", "--n", "8")
    assert code == 0
    (row,) = csv_rows(out)
    assert float(row["rel_err"]) == 0.0


def test_compare_jump_decreasing(capsys):
    _, out, _ = run(capsys, "compare", "--symbol", "jump", "--alpha", "1.884", "--xr", "1.884",
                    "--n", "16,32,64")
    rows = csv_rows(out)
    assert list(rows[0]) == ["N", "exact_re", "exact_im", "asym_re", "asym_im", "rel_err"]
    errs = [float(r["rel_err"]) for r in rows]
    assert len(errs) == 3 and errs[0] > errs[1] > errs[2]


def test_compare_dm(capsys):
    _, out, _ = run(capsys, "compare", "--symbol", "dm", "--alpha", "0", "--xr", "3.1416", "--n", "32")
    (row,) = csv_rows(out)
    assert float(row["rel_err"]) < 0.03


def test_correlator_green_zero(capsys):
    code, out, _ = run(capsys, "correlator", "--kind", "green", "--m", "20", "--l", "1",
                       "--x", "0.25", "--both")
    assert code == 0
    (rec,) = json_lines(out)
    assert abs(rec["exact"]["re"]) < 1e-6 and abs(rec["asym"]["re"]) < 1e-14
    assert "fh_sum" in rec


def test_correlator_grid_and_modes(capsys):
    _, out, _ = run(capsys, "correlator", "--kind", "counting", "--m", "8,16", "--x", "0.2,0.3",
                    "--alpha", "1.0", "--exact")
    recs = json_lines(out)
    assert [(r["M"], r["x"]) for r in recs] == [(8, 0.2), (8, 0.3), (16, 0.2), (16, 0.3)]
    assert all("asym" not in r and "exact" in r for r in recs)


def test_correlator_dd(capsys):
    _, out, _ = run(capsys, "correlator", "--kind", "dd", "--m", "20", "--x", "0.3")
    (rec,) = json_lines(out)
    assert abs(rec["det_exact"] - rec["det_free_fermion"]) < 1e-9 * rec["det_exact"]
    assert rec["asym"]["re"] == 400


def test_sweep_csv(capsys, tmp_path):
    path = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "sweep", "--kind", "galpha", "--m", "16,32", "--x", "0.3",
                       "--alpha", "0,3.141592653589793", "-o", str(path))
    assert code == 0 and out == ""
    rows = csv_rows(path.read_text())
    assert len(rows) == 4
    assert list(rows[0])[:3] == ["M", "x", "alpha"]
    assert all(float(r["rel_err"]) < 0.05 for r in rows)


def test_json_format_for_tabular(capsys):
    _, out, _ = run(capsys, "compare", "--symbol", "identity", "--n", "4,5", "--format", "json")
    recs = json_lines(out)
    assert [r["N"] for r in recs] == [4, 5]


def test_csv_format_for_records(capsys):
    _, out, _ = run(capsys, "barnes", "--z", "2", "--format", "csv")
    (row,) = csv_rows(out)
    assert float(row["G_re"]) == 1.0


def test_xr_frac(capsys):
    _, a, _ = run(capsys, "exact", "--symbol", "jump", "--alpha", "1", "--xr-frac", "0.25", "--n", "5")
    _, b, _ = run(capsys, "exact", "--symbol", "jump", "--alpha", "1", "--xr",
                  repr(2 * math.pi * 0.25), "--n", "5")
    assert a == b


def test_custom_symbol(capsys, tmp_path):
    f = tmp_path / "sym.json"
    f.write_text(json.dumps({"singularities": [], "log_coeffs": [0.25, 0.0, 0.25]}))
    _, out, _ = run(capsys, "exact", "--symbol", "custom", "--symbol-file", str(f), "--n", "64")
    (rec,) = json_lines(out)
    assert abs(rec["det"]["re"] / math.exp(0.0625) - 1) < 1e-10


def test_deterministic(capsys):
    argv = ("compare", "--symbol", "jump", "--alpha", "2.5", "--xr", "1.1", "--n", "12,24")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        ["exact", "--symbol", "jump", "--n", "4"],
        ["exact", "--symbol", "jump", "--xr", "7", "--n", "4"],
        ["exact", "--n", "0"],
        ["exact", "--xr", "1", "--xr-frac", "0.1", "--n", "3"],
        ["correlator", "--kind", "dd", "--m", "3", "--x", "0.2"],
        ["correlator", "--kind", "green", "--m", "5", "--x", "1.5"],
        ["sweep", "--kind", "nope", "--m", "5", "--x", "0.5"],
        ["exact", "--symbol", "custom", "--n", "3"],
        ["reps", "--bound", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2
    capsys.readouterr()


def test_numerical_error_exit_1(capsys, tmp_path):
    f = tmp_path / "sym.json"
    f.write_text(json.dumps({"singularities": [{"x": 1.0, "a": -0.7}]}))
    code, out, err = run(capsys, "exact", "--symbol", "custom", "--symbol-file", str(f), "--n", "3")
    assert code == 1 and out == ""
    assert "error" in json.loads(err)


def test_missing_file_exit_1(capsys, tmp_path):
    code, _, err = run(capsys, "exact", "--symbol", "custom", "--symbol-file",
                       str(tmp_path / "missing.json"), "--n", "3")
    assert code == 1 and json.loads(err)["type"] == "FileNotFoundError"
