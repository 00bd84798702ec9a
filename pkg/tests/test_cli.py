import json
from importlib import resources

import jsonschema
import pytest

from bbwlab.cli import run

SCHEMA = json.loads(resources.files("bbwlab").joinpath("schema/report.schema.json").read_text())


def _run(argv, capsys):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_reduced_ogr4(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = _run(["verify", "--family", "ogr", "--m", "4", "--mode", "reduced", "--json", str(path)], capsys)
    assert code == 0
    data = json.loads(path.read_text())
    jsonschema.validate(data, SCHEMA)
    assert data["doubled"] is True and data["result"]["verdict"] == "pass"
    assert "exceptional: pass" in out


def test_ext_example(capsys):
    code, out, _ = _run(["ext", "--space", "gr", "--n", "6", "--from", "Sym^2 U*", "--to", "Sym^2 U*(-3)"], capsys)
    assert code == 0
    assert out.strip() == "deg 4: dim 1"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--family", "gr", "--n", "2"],
        ["verify", "--family", "sgr"],
        ["ext", "--space", "gr", "--n", "6", "--from", "Nope", "--to", "O"],
        ["cohomology", "--space", "gr", "--n", "5", "--bundle", "-O"],
        ["clifford-check", "--n", "13"],
        ["complex-check", "--space", "gr", "--n", "5", "--kind", "crucial"],
        ["complex-check", "--space", "gr", "--n", "5", "--kind", "skus", "--k", "1", "--twists", "x"],
        ["report-all", "--only", "99"],
        ["frobnicate"],
        ["--jobs", "0", "verify", "--family", "gr", "--n", "4"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = _run(argv, capsys)
    assert code == 2
    assert err


def test_failure_exit_1_with_witness(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = _run(["report-all", "--only", "1", "--json", str(path)], capsys)
    assert code == 1
    assert out.startswith("[FAIL] criterion  1")
    data = json.loads(path.read_text())
    jsonschema.validate(data, SCHEMA)
    assert data["passed"] is False
    assert data["result"]["criteria"][0]["failure_count"] == 16


@pytest.mark.parametrize(
    "argv",
    [
        ["cohomology", "--space", "ogr", "--m", "3", "--bundle", "Spin (x) U*"],
        ["complex-check", "--space", "sgr", "--m", "3", "--kind", "bicomplex"],
        ["clifford-check", "--n", "6", "--samples", "3"],
        ["k-decompose", "--family", "sgr", "--m", "3", "--target", "Sym^3 U*"],
        ["k-decompose", "--family", "quadric", "--n", "7", "--target", "Spin(2)"],
    ],
)
def test_reports_validate(argv, tmp_path, capsys):
    path = tmp_path / "r.json"
    code, _, _ = _run(argv + ["--json", str(path)], capsys)
    assert code == 0
    jsonschema.validate(json.loads(path.read_text()), SCHEMA)


def test_output_is_independent_of_jobs(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert _run(["--jobs", "1", "verify", "--family", "gr", "--n", "8", "--json", str(a)], capsys)[0] == 0
    assert _run(["verify", "--family", "gr", "--n", "8", "--jobs", "4", "--json", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_seeded_clifford_runs_are_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    _run(["clifford-check", "--n", "7", "--samples", "4", "--seed", "3", "--json", str(a)], capsys)
    _run(["clifford-check", "--n", "7", "--samples", "4", "--seed", "3", "--json", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()


def test_cache_directory(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("BBWLAB_CACHE_DIR", str(tmp_path / "cache"))
    assert _run(["cohomology", "--space", "ogr", "--m", "4", "--bundle", "Sym^2 U* (x) Sym^2 U*"], capsys)[0] == 0
    cache = tmp_path / "cache" / "characters.json"
    data = json.loads(cache.read_text())
    assert data["format"] == "bbwlab-character-cache" and data["entries"]
    assert _run(["cohomology", "--space", "ogr", "--m", "4", "--bundle", "O"], capsys)[0] == 0
    cache.write_text("not json")
    code, _, err = _run(["cohomology", "--space", "ogr", "--m", "4", "--bundle", "O"], capsys)
    assert code == 0 and "ignoring" in err
