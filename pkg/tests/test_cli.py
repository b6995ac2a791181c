import csv
import io
import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from coherent_entropy import LN2, SchmidtPair
from coherent_entropy import verification
from coherent_entropy.cli import FIGURE_HEADER, REPORT_KEYS, SWEEP_HEADER, main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def dominates(r, slack=1e-12):
    e, g, t = (float(r[key]) for key in ("entropy", "bound_general", "bound_thm2"))
    return e >= g - slack and g >= t - slack


def test_entropy_json_schema_and_value():
    code, text = run(["entropy", "--backend", "sb", "--n", "1", "--k", "1", "--p", "0,0", "--q", "1,0"])
    assert code == 0
    rec = json.loads(text)
    assert tuple(rec) == REPORT_KEYS
    assert rec["entropy"] == pytest.approx(0.2174813888752655, abs=1e-15)
    assert rec["bound_general"] == pytest.approx(0.10677613351703629, abs=1e-15)
    assert rec["bound_thm2"] == pytest.approx(0.07983065007559264, abs=1e-15)
    assert rec["decomposable"] is False


def test_entropy_projective_maximum_negative_coordinate():
    code, text = run(["entropy", "--backend", "cp1", "--k", "1", "--p", "1,0", "--q", "-1,0"])
    assert code == 0
    rec = json.loads(text)
    assert rec["entropy"] == pytest.approx(LN2, abs=1e-15)
    assert rec["bound_thm2"] is None
    assert rec["n"] == 1


def test_entropy_decomposable():
    code, text = run(["entropy", "--backend", "sb", "--n", "1", "--k", "1", "--p", "1,0", "--q", "1,0"])
    rec = json.loads(text)
    assert code == 0 and rec["entropy"] == 0.0 and rec["decomposable"] is True


def test_entropy_csv_format():
    code, text = run(["entropy", "--p=0.5,0.5", "--q=-0.5,0", "--format", "csv"])
    (row,) = rows(text)
    assert code == 0
    assert tuple(row) == REPORT_KEYS
    assert row["bound_thm2"] != ""


def test_entropy_multidimensional_point_syntax():
    code, text = run(["entropy", "--n", "2", "--p", "1.0,0.0;2.0,-1.0", "--q", "0,0;0,0"])
    rec = json.loads(text)
    assert code == 0
    assert rec["abs_c"] == pytest.approx(math.exp(-6 / 2))


@pytest.mark.parametrize(
    "argv",
    [
        ["entropy", "--p", "1;2"],
        ["entropy", "--p", "a,b"],
        ["entropy", "--k", "0"],
        ["entropy", "--backend", "xx"],
        ["entropy", "--k", "1.5"],
        ["nope"],
        ["sweep", "--min", "5", "--max", "2"],
        ["sweep", "--min", "1.5", "--max", "3"],
        ["sweep", "--variable", "x", "--steps", "1"],
        ["verify", "--cases", "-1"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, text = run(argv)
    assert code == 2
    assert text == ""


def test_backend_error_exit_3(capsys):
    code, text = run(["entropy", "--n", "2", "--p", "0,0", "--q", "1,0"])
    assert code == 3
    assert text == ""
    assert "dimension" in capsys.readouterr().err


def test_extreme_level_no_overflow():
    code, text = run(["entropy", "--backend", "sb", "--n", "1", "--k", "100000", "--p", "0,0", "--q", "10,0"])
    rec = json.loads(text)
    assert code == 0
    assert abs(rec["entropy"] - LN2) <= 1e-12


def test_sweep_level_sb_magnitude_law():
    code, text = run(["sweep", "--backend", "sb", "--p", "0,0", "--q", "1,0", "--min", "1", "--max", "50"])
    assert code == 0
    data = rows(text)
    assert tuple(data[0]) == SWEEP_HEADER
    assert [int(r["k"]) for r in data] == list(range(1, 51))
    for r in data:
        k = int(r["k"])
        assert float(r["abs_c"]) == pytest.approx(math.exp(-k / 2), rel=1e-12)
        assert dominates(r)
        assert r["x"] == ""


def test_sweep_level_cp1_convergence():
    code, text = run(["sweep", "--backend", "cp1", "--p", "0.3,0", "--q", "-0.3,0", "--min", "1", "--max", "200"])
    data = rows(text)
    e = [float(r["entropy"]) for r in data]
    assert all(b >= a for a, b in zip(e, e[1:]))
    assert abs(e[-1] - LN2) < 1e-3
    assert all(r["bound_thm2"] == "" for r in data)
    deficits = [float(r["deficit"]) for r in data]
    assert all(b <= a for a, b in zip(deficits, deficits[1:]))


def test_sweep_level_steps_subsample():
    code, text = run(["sweep", "--min", "1", "--max", "10", "--steps", "4"])
    assert [int(r["k"]) for r in rows(text)] == [1, 4, 7, 10]


def test_sweep_separation():
    code, text = run(["sweep", "--variable", "x", "--backend", "sb", "--k", "3", "--min", "0", "--max", "2", "--steps", "5"])
    data = rows(text)
    assert code == 0
    assert [float(r["x"]) for r in data] == [0.4, 0.8, 1.2, 1.6, 2.0]
    for r in data:
        assert float(r["dist"]) == pytest.approx(2 * float(r["x"]))
        assert dominates(r)


def test_sweep_json():
    code, text = run(["sweep", "--min", "1", "--max", "3", "--format", "json"])
    data = json.loads(text)
    assert [d["k"] for d in data] == [1, 2, 3]
    assert tuple(data[0]) == SWEEP_HEADER


def test_outputs_bit_stable():
    argv = ["sweep", "--backend", "cp1", "--p", "0.1,0.2", "--q", "-0.7,0", "--max", "30"]
    assert run(argv) == run(argv)
    assert run(["figure1"]) == run(["figure1"])


def test_floats_round_trip():
    code, text = run(["figure1", "--steps", "50"])
    for r in rows(text):
        for key in FIGURE_HEADER:
            assert repr(float(r[key])) == r[key]


def test_figure1_default_grid():
    code, text = run(["figure1"])
    data = rows(text)
    assert code == 0
    assert tuple(data[0]) == FIGURE_HEADER
    assert len(data) == 500
    assert float(data[0]["x"]) == 0.01 and float(data[-1]["x"]) == 5.0
    for r in data:
        assert abs(float(r["entropy_closed_form"]) - float(r["entropy_pipeline"])) <= 1e-12
    at_one = next(r for r in data if float(r["x"]) == 1.0)
    assert float(at_one["entropy_closed_form"]) == pytest.approx(LN2, abs=1e-10)
    assert float(data[-1]["entropy_pipeline"]) < 0.02


def test_figure1_svg(tmp_path):
    path = tmp_path / "fig.svg"
    code, text = run(["figure1", "--steps", "100", "--svg", str(path)])
    assert code == 0
    root = ET.parse(path).getroot()
    ns = "{http://www.w3.org/2000/svg}"
    (poly,) = root.iter(f"{ns}polyline")
    assert len(poly.get("points").split()) == 100
    assert len(list(root.iter(f"{ns}text"))) > 6
    assert text.startswith("x,entropy_closed_form,entropy_pipeline")


def test_figure1_unwritable_svg(tmp_path):
    code, text = run(["figure1", "--svg", str(tmp_path / "missing" / "fig.svg")])
    assert code == 4


def test_verify_zero_cases(capsys):
    code, text = run(["verify", "--cases", "0"])
    assert code == 0
    assert "0 failed" in text
    assert "random-pair" not in text


def test_verify_passes():
    code, text = run(["verify", "--seed", "42", "--cases", "1000"])
    assert code == 0
    assert "1208 passed, 0 failed" in text


def test_verify_detects_corrupted_schmidt(monkeypatch, capsys):
    def corrupted(c):
        # sign flipped on the Im(c)^2 term of the denominator
        a, b = c.c.real, c.c.imag
        d = abs(a) * math.sqrt(1 - b * b) / (1 + a * a + b * b)
        return SchmidtPair(0.5 + d, 0.5 - d)

    monkeypatch.setattr(verification, "schmidt_pair", corrupted)
    code, text = run(["verify", "--cases", "20"])
    assert code == 1
    err = capsys.readouterr().err
    assert "FAIL [random-pair]" in err and '"seed"' in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coherent_entropy.cli", "entropy", "--backend", "cp1", "--p", "1,0", "--q", "-1,0"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["entropy"] == pytest.approx(LN2)
