import json

import pytest

from webcoord.cli import Report, dispatch, main


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(map(str, argv)))
        return code, json.loads(capsys.readouterr().out)
    return _run


@pytest.fixture
def torus_file(fixtures_dir):
    return fixtures_dir / "torus.json"


def test_validate(run, torus_file):
    code, rep = run("validate", torus_file, "--dots")
    assert code == 0 and rep["status"] == "ok"
    assert rep["payload"]["euler_characteristic"] == -1
    assert rep["payload"]["dots"] == ["aL", "aR", "bL", "bR", "cL", "cR", "tT0", "tT1"]


def test_validate_bad_file(run, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"triangles": ["T0"], "edges": []}')
    code, rep = run("validate", bad)
    assert code == 1 and rep["status"] == "invalid" and rep["payload"] == {}
    code, rep = run("validate", tmp_path / "missing.json")
    assert code == 1


def test_coords_with_rhombus(run, fixtures_dir):
    code, rep = run("coords", fixtures_dir / "torus_loop.json", "--rhombus")
    assert code == 0
    assert rep["payload"]["coordinates"] == [0, 0, 1, 2, 2, 1, 1, 2]
    assert rep["payload"]["rhombus"] == {
        "T0": [1, 0, 0, 0, 0, 0, 0, 0, 0],
        "T1": [0, 1, 1, 0, 0, 0, 0, 0, 0],
    }


def test_cone_check_zero(run, torus_file):
    code, rep = run("cone-check", torus_file, "0,0,0,0,0,0,0,0")
    assert code == 0 and rep["payload"] == {"in_cone": True, "decomposition": {}}


def test_cone_check_decomposition(run, torus_file):
    code, rep = run("cone-check", torus_file, "1,2,1,2,1,2,3,3")
    assert rep["payload"]["decomposition"] == {"T0": {"Hout": 1}, "T1": {"Hin": 1}}


def test_cone_check_rejects(run, torus_file):
    code, rep = run("cone-check", torus_file, "1,0,0,0,0,0,0,0")
    assert code == 2 and rep["status"] == "not-in-cone" and rep["payload"] == {}


@pytest.mark.parametrize("vector", ["1,2,x", "0,0,0"])
def test_cone_check_bad_vector(run, torus_file, vector):
    code, rep = run("cone-check", torus_file, vector)
    assert code == 1 and rep["status"] == "invalid"


def test_reconstruct_writes_file(run, torus_file, tmp_path):
    out = tmp_path / "out.json"
    code, rep = run("reconstruct", torus_file, "1,2,1,2,1,2,3,3", "-o", out)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc == rep["payload"]["web"]
    assert doc["webs"]["T0"] == {"honeycomb": {"dir": "out", "n": 1}, "corners": ["", "", ""]}
    assert doc["webs"]["T1"]["honeycomb"] == {"dir": "in", "n": 1}
    # the written web is a valid input for the other subcommands
    code, rep = run("coords", out)
    assert rep["payload"]["coordinates"] == [1, 2, 1, 2, 1, 2, 3, 3]


def test_roundtrip(run, fixtures_dir):
    code, rep = run("roundtrip", fixtures_dir / "torus_loop.json")
    assert code == 0 and rep["payload"]["roundtrip"] is True


def _write_web(tmp_path, fixtures_dir, t0, t1):
    doc = {
        "triangulation": str(fixtures_dir / "torus.json"),
        "webs": {
            "T0": {"honeycomb": {"dir": "none"}, "corners": [t0, "", ""]},
            "T1": {"honeycomb": {"dir": "none"}, "corners": [t1, "", ""]},
        },
    }
    path = tmp_path / "w.json"
    path.write_text(json.dumps(doc))
    return path


def test_roundtrip_elliptic(run, tmp_path, fixtures_dir):
    code, rep = run("roundtrip", _write_web(tmp_path, fixtures_dir, "RL", "LR"))
    assert code == 2 and rep["status"] == "elliptic"


def test_incompatible_web(run, tmp_path, fixtures_dir):
    code, rep = run("coords", _write_web(tmp_path, fixtures_dir, "R", ""))
    assert code == 1 and rep["status"] == "invalid"


def test_enumerate(run, torus_file):
    code, rep = run("enumerate", torus_file, "--max", 2)
    assert rep["payload"]["count"] == 7
    assert [0, 0, 1, 2, 2, 1, 1, 2] in rep["payload"]["points"]
    code2, rep2 = run("enumerate", torus_file, "--max", 2, "--jobs", 2)
    assert rep2 == rep


def test_trace(run, tmp_path, fixtures_dir):
    code, rep = run("trace", _write_web(tmp_path, fixtures_dir, "RL", "LR"))
    assert code == 0
    assert len(rep["payload"]["travelers"]) == 2
    assert len(rep["payload"]["crossings"]) == 2
    assert len(rep["payload"]["square_faces"]) == 1


def test_confluence(run, tmp_path, fixtures_dir):
    code, rep = run("confluence", _write_web(tmp_path, fixtures_dir, "RLRL", "LRLR"))
    assert code == 0
    assert rep["payload"]["orders"] == 2 and rep["payload"]["squares"] == 2


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["coords"], ["enumerate", "x.json"]])
def test_usage_errors(argv):
    code, report = dispatch(argv)
    assert code == 1 and report.status == "invalid" and report.diagnostics


def test_report_serialization_is_deterministic():
    r = Report("invalid", {"coordinates": [1]}, ["boom"])
    assert json.loads(r.to_json()) == {"status": "invalid", "payload": {}, "diagnostics": ["boom"]}
    assert r.to_json() == r.to_json()


def test_coords_reconstruct_coords_idempotent(run, fixtures_dir, tmp_path):
    _, first = run("coords", fixtures_dir / "torus_loop.json")
    vec = ",".join(map(str, first["payload"]["coordinates"]))
    out = tmp_path / "r.json"
    run("reconstruct", fixtures_dir / "torus.json", vec, "-o", out)
    _, again = run("coords", out)
    assert again["payload"]["coordinates"] == first["payload"]["coordinates"]


def test_console_entry_point(torus_file):
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "webcoord.cli", "cone-check", str(torus_file), "0,0,0,0,0,0,0,0"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["status"] == "ok"
