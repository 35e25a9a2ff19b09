from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conedec import pommaret_on_slice
from conedec.cli import main
from conedec.division import RelDivision, make_division


@pytest.fixture
def p32_file(tmp_path):
    path = tmp_path / "p32.json"
    path.write_text(pommaret_on_slice(3, 2).to_json())
    return str(path)


@pytest.fixture
def bad31_file(tmp_path):
    div = make_division(3, 1, {"x": "x,y", "y": "y,z", "z": "x,z"})
    path = tmp_path / "bad31.json"
    path.write_text(div.to_json())
    return str(path)


def test_gen_pommaret(capsys):
    assert main(["gen", "pommaret", "3", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["degree"] == 2
    assert data["multiplicative"]["z^2"] == ["x", "y", "z"]
    assert list(data["multiplicative"]) == ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]


def test_gen_janet_identical_output(capsys):
    main(["gen", "pommaret", "3", "2"])
    pom = capsys.readouterr().out
    main(["gen", "janet", "3", "2"])
    jan = capsys.readouterr().out
    assert pom == jan


def test_gen_reordered(capsys):
    assert main(["gen", "pommaret", "3", "2", "--order", "3,2,1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["multiplicative"]["z^2"] == ["z"]
    assert data["multiplicative"]["x^2"] == ["x", "y", "z"]


def test_gen_output_roundtrips(capsys):
    main(["gen", "pommaret", "4", "3"])
    text = capsys.readouterr().out
    div = RelDivision.from_json(text)
    assert div.to_json() + "\n" == text


def test_validate_ok(capsys, p32_file):
    assert main(["validate", p32_file]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"valid": True, "violations": [], "notes": []}


def test_validate_invalid(capsys, bad31_file):
    assert main(["validate", bad31_file]) == 1
    data = json.loads(capsys.readouterr().out)
    assert not data["valid"]
    kinds = {v["kind"] for v in data["violations"]}
    assert kinds == {"profile-mismatch", "no-peak"}


def test_validate_with_oracle(capsys, bad31_file):
    assert main(["validate", bad31_file, "--oracle", "2"]) == 1
    data = json.loads(capsys.readouterr().out)
    kinds = {v["kind"] for v in data["violations"]}
    assert "uncovered" in kinds
    assert any(v.get("term") == "x*y*z" for v in data["violations"])


def test_validate_missing_file(capsys, tmp_path):
    assert main(["validate", str(tmp_path / "nope.json")]) == 2


def test_enumerate_with_orbits(capsys):
    assert main(["enumerate", "3", "2", "--orbits"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 9
    summary = json.loads(lines[-1])
    assert summary["count"] == 8
    assert sorted(summary["orbit_sizes"]) == [3, 3, 6, 6, 6, 6, 6, 6]
    for line in lines[:-1]:
        div = RelDivision.from_json(line)
        assert div.validate().valid


def test_enumerate_full_stream(capsys):
    assert main(["enumerate", "2", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[-1]) == {"count": 3}
    assert len(lines) == 4


def test_graph_dot(capsys, p32_file):
    assert main(["graph", p32_file]) == 0
    dot = capsys.readouterr().out
    assert dot.count("->") == 8
    assert dot.splitlines()[0] == "digraph division {"


def test_graph_json_kinds(capsys, p32_file):
    assert main(["graph", p32_file, "--kind", "generalized", "--format", "json"]) == 0
    gen = json.loads(capsys.readouterr().out)
    assert main(["graph", p32_file, "--kind", "redundant", "--format", "json"]) == 0
    red = json.loads(capsys.readouterr().out)
    assert {tuple(e[:2]) for e in gen["edges"]} <= {tuple(e[:2]) for e in red["edges"]}
    assert all(e[2] is None for e in red["edges"])


def test_graph_rejects_invalid(capsys, bad31_file):
    assert main(["graph", bad31_file]) == 1


def test_closure_ideal(capsys, p32_file):
    assert main(["closure", p32_file, "x*y", "--mode", "ideal"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["closure"] == ["x*y", "y^2", "y*z", "z^2"]
    assert data["certified"] is True
    assert data["seed"] == ["x*y"]


def test_closure_escalier(capsys, tmp_path):
    div = make_division(3, 2, {
        "x^2": "x,y,z", "x*y": "y,z", "y^2": "y",
        "x*z": "z", "y*z": "y,z", "z^2": "z"})
    path = tmp_path / "d.json"
    path.write_text(div.to_json())
    assert main(["closure", str(path), "x*z", "--mode", "escalier"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["closure"] == ["x*z", "z^2"]
    assert data["certified"] is True


def test_closure_compound_seed_terms(capsys, tmp_path):
    from conftest import TR_ROWS

    path = tmp_path / "tr.json"
    path.write_text(make_division(4, 3, TR_ROWS).to_json())
    assert main(["closure", str(path), "x^2*y"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["closure"] == ["x^2*y", "x^2*z", "x^2*t", "y*z*t"]


def test_closure_foreign_seed(capsys, p32_file):
    assert main(["closure", p32_file, "x^3"]) == 1


def test_build_script(capsys, tmp_path):
    script = tmp_path / "s.txt"
    script.write_text("x*y = x,y,z\nx*z = x,z\nz^2 = y,z\ny^2 = y\ny*z = y\n")
    assert main(["build", "3", "2", "--script", str(script)]) == 0
    div = RelDivision.from_json(capsys.readouterr().out)
    assert div.multiplicative_set((1, 1, 0)) == frozenset({1, 2, 3})
    assert div.validate().valid


def test_build_script_conflict(capsys, tmp_path):
    script = tmp_path / "s.txt"
    script.write_text("x*y = x,y,z\nz^2 = x,y,z\n")
    assert main(["build", "3", "2", "--script", str(script)]) == 1
    err = capsys.readouterr().err
    assert "conflict" in err


def test_build_script_incomplete(capsys, tmp_path):
    script = tmp_path / "s.txt"
    script.write_text("x*y = x,y,z\n")
    assert main(["build", "3", "2", "--script", str(script)]) == 1
    assert "incomplete" in capsys.readouterr().err


def test_build_needs_tty_without_script(capsys, monkeypatch):
    monkeypatch.setattr(sys.stdin, "isatty", lambda: False)
    assert main(["build", "3", "2"]) == 2


def test_sigma_expected_only(capsys):
    assert main(["sigma", "4", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"expected": [10, 6, 3, 1], "sum": 20}


def test_sigma_against_division(capsys, p32_file, bad31_file):
    assert main(["sigma", "--division", p32_file]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"profile": [3, 2, 1], "expected": [3, 2, 1], "match": True}
    assert main(["sigma", "--division", bad31_file]) == 1
    data = json.loads(capsys.readouterr().out)
    assert data["match"] is False


def test_sigma_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["sigma"])
    assert exc.value.code == 2


def test_vandermonde(capsys):
    assert main(["vandermonde", "3", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"n": 3, "degree": 2, "d_max": 12, "holds": True}
    assert main(["vandermonde", "5", "4", "8"]) == 0


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_color_gate(monkeypatch):
    from conedec.cli import _color_allowed

    monkeypatch.setattr(sys.stdout, "isatty", lambda: True, raising=False)
    monkeypatch.delenv("NO_COLOR", raising=False)
    assert _color_allowed()
    monkeypatch.setenv("NO_COLOR", "1")
    assert not _color_allowed()


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "conedec", "sigma", "3", "2"],
        capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout) == {"expected": [3, 2, 1], "sum": 6}
