import csv
import io
import json
import subprocess
import sys

import pytest

from alphavac.cli import main


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_point_q(capsys):
    assert main(["point", "--alpha=-1", "--q", "0.5"]) == 0
    (row,) = _rows(capsys.readouterr().out)
    assert float(row["T"]) == pytest.approx(0.733043605245, abs=1e-12)
    assert float(row["negativity_spectral"]) == pytest.approx(0.163073493222, abs=1e-11)
    assert row["error"] == ""


def test_point_t_direct_json(capsys):
    assert main(["point", "--t-direct", "0", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    row = doc["rows"][0]
    assert row["alpha"] == "-inf"
    assert row["discord"] == pytest.approx(1.0, abs=1e-12)


def test_point_hubble_to_file(tmp_path, capsys):
    out = tmp_path / "p.csv"
    assert main(["point", "--alpha", "-2", "--hubble", "2", "--k", "1", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    (row,) = _rows(out.read_text())
    assert float(row["hubble_H"]) == 2.0 and float(row["k"]) == 1.0


@pytest.mark.parametrize("argv", [
    ["point"],
    ["point", "--q", "0.5", "--hubble", "1"],
    ["point", "--alpha=0.5", "--q", "0.5"],
    ["point", "--q", "1.5"],
    ["point", "--alpha=abc", "--q", "0.5"],
    ["figure", "FIG9"],
    ["sweep", "/nonexistent/config.json"],
    ["figure", "FIG6", "--threads", "0"],
    ["bogus"],
])
def test_config_errors_exit_1(argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_unwritable_output_exit_2(tmp_path):
    assert main(["point", "--q", "0.2", "--out", str(tmp_path / "no" / "x.csv")]) == 2


def test_sweep_config_file(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({
        "alpha_values": ["-inf", -1], "q_values": [0.2, 0.6], "theta_points": 8, "phi_points": 2,
        "outputs": [
            {"figure": "FIG2", "format": "csv", "path": str(tmp_path / "fig2.csv")},
            {"figure": "FIG4", "format": "json", "path": str(tmp_path / "fig4.json")},
        ],
    }))
    assert main(["sweep", str(cfg)]) == 0
    assert len(_rows((tmp_path / "fig2.csv").read_text())) == 4
    assert json.loads((tmp_path / "fig4.json").read_text())["figure_tag"] == "FIG4_MUTUAL_INFO"
    # a single --out with several figures is ambiguous
    assert main(["sweep", str(cfg), "--out", str(tmp_path / "x.csv")]) == 1


def test_sweep_overrides(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"t_values": [0.9], "theta_points": 8, "phi_points": 2}))
    assert main(["sweep", str(cfg), "--n-cap", "16"]) == 0
    (row,) = _rows(capsys.readouterr().out)
    assert row["n_max"] == "16"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "alphavac", "point", "--t-direct", "0.5"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0, res.stderr
    assert res.stdout.startswith("alpha,k,hubble_H,q,f,T,")
