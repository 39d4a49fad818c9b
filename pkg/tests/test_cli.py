import json
import subprocess
import sys

import pytest

from distcolor import discharge, reducer
from distcolor.cli import main
from distcolor.solver import Unsat


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, (json.loads(captured.out) if captured.out else None), captured.out


@pytest.fixture
def grid_file(tmp_path, capsys):
    path = tmp_path / "grid3x3.json"
    assert main(["gen", "--gen", "grid:3x3", "--out", str(path)]) == 0
    return path


def test_theta_girth(capsys):
    code, out, _ = run(["metrics", "--gen", "theta:3", "--girth"], capsys)
    assert code == 0 and out == {"girth": 6}


def test_ig3_injective_chromatic(capsys):
    code, out, _ = run(["chromatic", "--kind", "injective", "--gen", "ig:3"], capsys)
    assert code == 0 and out == {"chi": 13}


def test_verify_grid(grid_file, capsys):
    code, out, _ = run(["verify", "--theorem", "injg4", "--in", str(grid_file)], capsys)
    assert code == 0 and out["outcome"] == "ConfigFound" and out["witnesses"]


def test_metrics_full_report(capsys):
    code, out, _ = run(["metrics", "--gen", "cycle:5"], capsys)
    assert code == 0
    assert out["n"] == 5 and out["m"] == 5 and out["mad"] == "2/1" and out["diameter"] == 2
    assert out["exact_two"][0] == [2, 3]


def test_acyclic_girth_is_infinite(capsys):
    _, out, _ = run(["metrics", "--gen", "path:4", "--girth"], capsys)
    assert out == {"girth": "inf"}


def test_faces_and_conflict(capsys):
    _, out, _ = run(["faces", "--gen", "cube"], capsys)
    assert sorted(f["size"] for f in out["faces"]) == [4] * 6
    _, out, _ = run(["conflict", "--kind", "2distance", "--gen", "cycle:5"], capsys)
    assert out["n"] == 5 and len(out["edges"]) == 10


def test_color_unsat_exit_three(capsys):
    code, out, _ = run(["color", "--kind", "2distance", "--gen", "cycle:5", "--k", "4"], capsys)
    assert code == 3 and out is not None


def test_color_list_and_constructive(capsys):
    code, out, _ = run(["color", "--kind", "2distance", "--gen", "cycle:5", "--k", "5"], capsys)
    assert code == 0
    code, out, _ = run(["color", "--theorem", "injg4", "--gen", "grid:3x3"], capsys)
    assert code == 0 and out["reductions"]


def test_color_lists_file(tmp_path, capsys):
    lists = tmp_path / "lists.json"
    lists.write_text(json.dumps({"lists": [[0, 1, 2, 3, 4]] * 4 + [[9, 8, 7, 6, 5]]}))
    code, out, _ = run(["color", "--kind", "2distance", "--gen", "cycle:5", "--lists", str(lists)], capsys)
    assert code == 0
    bad = tmp_path / "short.json"
    bad.write_text(json.dumps({"lists": [[0]]}))
    code, _, _ = run(["color", "--kind", "2distance", "--gen", "cycle:5", "--lists", str(bad)], capsys)
    assert code == 1


def test_input_errors_exit_one(tmp_path, capsys):
    assert main(["chromatic", "--kind", "injective", "--gen", "nosuch:3"]) == 1
    assert main(["chromatic", "--gen", "cycle:5"]) == 1
    assert main(["chromatic", "--kind", "injective", "--in", str(tmp_path / "missing.json")]) == 1
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    assert main(["metrics", "--in", str(garbage)]) == 1
    assert main(["detect", "--theorem", "2dg4", "--gen", "octahedron"]) == 1
    err = capsys.readouterr().err
    assert "error" in err


def test_verify_anomaly_exit_two(monkeypatch, capsys):
    monkeypatch.setattr(discharge, "detect_all", lambda pg, t, check=False: [])
    code, out, _ = run(["verify", "--theorem", "injg3", "--gen", "cube"], capsys)
    assert code == 2 and out["outcome"] == "Anomaly"


def test_gap_report_exit_two(monkeypatch, capsys):
    monkeypatch.setattr(reducer, "extend_precoloring", lambda *a: Unsat(frozenset({0}), "forced"))
    code, out, _ = run(["color", "--theorem", "2dg4", "--gen", "cycle:8"], capsys)
    assert code == 2 and out["gap"]


def test_detect_and_discharge(capsys):
    code, out, _ = run(["detect", "--theorem", "2dg4", "--gen", "grid:3x3"], capsys)
    assert code == 0 and out["witnesses"][0]["lemma"] == "2dg4:minimumDegree"
    code, out, _ = run(["discharge", "--theorem", "exact", "--gen", "grid:3x3"], capsys)
    assert code == 0 and out["final"]["total"] == "-8/1"


def test_gen_round_trip(tmp_path, capsys):
    path = tmp_path / "pet.json"
    assert main(["gen", "petersen", "--out", str(path)]) == 0
    d = json.loads(path.read_text())
    assert "rotation" not in d and d["n"] == 10
    code, out, _ = run(["chromatic", "--kind", "2distance", "--in", str(path)], capsys)
    assert out == {"chi": 10}


def test_corpus_run(tmp_path, capsys):
    code, out, _ = run(["corpus", "--exhaustive", "5", "--random", "5", "--jobs", "2"], capsys)
    assert code == 0 and out["graphs"] == 30 + 5
    assert all(s["anomalies"] == 0 for s in out["theorems"].values())
    d = tmp_path / "dir"
    d.mkdir()
    assert main(["gen", "grid:3x3", "--out", str(d / "a.json")]) == 0
    capsys.readouterr()
    code, out, _ = run(["corpus", "--in", str(d), "--theorem", "injg4"], capsys)
    assert code == 0 and out["theorems"]["injg4"]["checked"] == 1


def test_probe(capsys):
    code, out, _ = run(["probe", "--kind", "injective", "--gen", "ig:3", "--k", "12", "--pool", "12", "--trials", "3"], capsys)
    assert code == 0 and out["first_refutation"] is not None


def test_byte_stable_output(capsys):
    argv = ["probe", "--kind", "injective", "--gen", "theta:4", "--k", "5", "--trials", "20", "--seed", "5"]
    _, _, first = run(argv, capsys)
    _, _, second = run(argv, capsys)
    assert first == second
    keys = list(json.loads(first))
    assert keys == sorted(keys)


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "distcolor", "metrics", "--gen", "theta:3", "--girth"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and json.loads(res.stdout) == {"girth": 6}
