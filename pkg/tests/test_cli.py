from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from rank2.cli import EXIT_ERROR, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_module_calibrated(capsys):
    code, out, _ = run(capsys, "module", "C2", "t_a", "calibrated", "--j", "a1", "--format", "json")
    s = json.loads(out)
    assert code == EXIT_OK
    assert s["dim"] == 3 and s["relations_ok"] and s["irreducible"] and s["calibrated"]
    assert [w["weight"] for w in s["weights"]] == ["s1", "s2s1", "s1s2s1"]


def test_module_principal_and_induced(capsys):
    code, out, _ = run(capsys, "module", "G2", "t_e", "principal")
    assert code == EXIT_OK and "dim 12" in out and "reducible" in out.split("\n")[3]
    code, out, _ = run(capsys, "module", "A2", "t_c", "induced", "--i", "2", "--format", "json")
    s = json.loads(out)
    assert code == EXIT_OK and s["dim"] == 3 and s["irreducible"]


def test_dump_matrices(capsys):
    code, out, _ = run(capsys, "module", "A1", "t_a", "principal", "--dump-matrices", "--format", "json")
    mats = json.loads(out)["matrices"]
    assert code == EXIT_OK and set(mats) == {"T1", "X^omega1"}
    assert len(mats["T1"]) == 2 and all(len(row) == 2 for row in mats["T1"])


def test_graph_formats(capsys):
    code, out, _ = run(capsys, "graph", "A1", "t_o")
    assert code == EXIT_OK and out.startswith("graph") and " -- " not in out
    _, out, _ = run(capsys, "graph", "G2", "t_a", "--format", "json")
    g = json.loads(out)
    assert sorted(len(c) for c in g["components"]) == [1, 1, 5, 5]
    _, out, _ = run(capsys, "graph", "C2", "t_e", "--format", "text")
    assert "4 vertices, 2 edges" in out


def test_factors(capsys):
    code, out, _ = run(capsys, "factors", "C2", "t_a", "--format", "json")
    rows = json.loads(out)["factors"]
    assert code == EXIT_OK and sorted(r["dim"] for r in rows) == [1, 1, 3, 3]


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--system", "A1", "--format", "json")
    assert code == EXIT_OK
    assert [r["label"] for r in json.loads(out)["fixtures"]] == ["A1.t_a", "A1.t_b", "A1.t_o+", "A1.t_o-"]


def test_verify_all_restricted(capsys, tmp_path):
    path = tmp_path / "a1.json"
    code, out, _ = run(capsys, "verify-all", "--system", "A1", "--format", "json", "-o", str(path))
    assert code == EXIT_OK and out == ""
    assert len(json.loads(path.read_text())["fixtures"]) == 4
    assert os.listdir(tmp_path) == ["a1.json"]
    code, out, _ = run(capsys, "verify-all", "--label", "C2.t_a", "--format", "csv")
    assert code == EXIT_OK and len(out.splitlines()) == 1 + 4
    code, out, _ = run(capsys, "verify-all", "--system", "A1")
    assert out.rstrip().endswith("4 fixtures, 0 diffs")


@pytest.mark.parametrize(
    "argv",
    [
        ["module", "A2", "t_zz", "principal"],
        ["module", "C2", "t_a", "calibrated", "--j", "a7"],
        ["module", "A2", "t_c", "calibrated", "--j", "a2"],
        ["module", "A2", "t_c", "induced", "--i", "1"],
        ["graph", "A1", "t_a", "--format", "csv"],
        ["verify-all", "--format", "dot"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_ERROR and out == "" and err.startswith("rank2: ")


def test_config_error_leaves_no_output(capsys, tmp_path):
    path = tmp_path / "x.json"
    code, _, err = run(capsys, "verify-all", "--n", "4", "--format", "json", "-o", str(path))
    assert code == EXIT_ERROR and "configuration error" in err
    assert os.listdir(tmp_path) == []


def test_module_entry_point():
    env = dict(os.environ, PYTHONHASHSEED="0")
    p = subprocess.run([sys.executable, "-m", "rank2.cli", "catalog", "--system", "A1"],
                       capture_output=True, text=True, env=env, check=False)
    assert p.returncode == 0 and len(p.stdout.splitlines()) == 4
