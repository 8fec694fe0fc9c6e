"""CLI contract: exit codes, output determinism, JSON parity."""

import json

import pytest

from ehrhart.cli import main
from ehrhart.simplex import dump_simplex, load_simplex, new_simplex


@pytest.fixture
def section2_file(tmp_path):
    path = tmp_path / "s2.json"
    dump_simplex(new_simplex([[0, 0, 0], [1, 1, 0], [0, 1, 1], [1, 0, 1]]), str(path))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_delta_section2(section2_file, capsys):
    code, out = run(capsys, "delta", section2_file, "--method", "both")
    assert code == 0
    assert "delta 1 0 1 0" in out
    assert "normalized_volume 2" in out
    assert "volume 1/3" in out


def test_delta_unit_simplex(tmp_path, capsys):
    path = tmp_path / "unit.json"
    dump_simplex(new_simplex([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]), str(path))
    code, out = run(capsys, "delta", str(path))
    assert code == 0 and "delta 1 0 0 0" in out


def test_delta_invalid_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"ambient_dim": 2, "vertices": [[0,0],[1,1],[2,2]]}')
    code, out = run(capsys, "delta", str(path))
    assert code == 1 and "status invalid-input" in out


def test_delta_budget_exceeded(tmp_path, capsys):
    path = tmp_path / "big.json"
    dump_simplex(new_simplex([[0, 0, 0], [99, 0, 0], [0, 99, 0], [0, 0, 99]]), str(path))
    code, out = run(capsys, "delta", str(path), "--method", "counts", "--budget", "1000")
    assert code == 4 and "status budget-exceeded" in out


def test_check_exit_codes(capsys):
    assert run(capsys, "check", "1", "0", "1", "0")[0] == 0
    code, out = run(capsys, "check", "1", "0", "1", "0", "0", "1", "0")
    assert code == 2 and "stanley fail at i=2" in out
    code, out = run(capsys, "check", "1", "0", "1", "0", "1", "1", "0", "0")
    assert code == 3 and "stanley pass" in out and "hibi pass" in out


def test_check_rejects_non_integer(capsys):
    code, out = run(capsys, "check", "1", "x")
    assert code == 1 and "status invalid-input" in out


def test_realize_writes_verified_witness(tmp_path, capsys):
    out_path = tmp_path / "w.json"
    code, out = run(
        capsys, "realize", "1", "0", "0", "1", "0", "1", "0", "0", "0", "0", "--out", str(out_path)
    )
    assert code == 0 and "verified yes" in out
    witness = load_simplex(str(out_path))
    assert witness.dim == 9


def test_realize_not_realizable(capsys):
    code, out = run(capsys, "realize", "1", "1", "0", "0", "1")
    assert code == 2 and "status not-realizable" in out


def test_realize_out_of_scope(capsys):
    code, out = run(capsys, "realize", "1", "1", "1", "1")
    assert code == 3 and "status out-of-scope" in out


def test_enumerate_d3(capsys):
    code, out = run(capsys, "enumerate", "--dim", "3", "--max-sum", "3")
    assert code == 0
    assert out.count("yes") == 6 + 1  # six rows plus the yes_count key line


def test_enumerate_d5_sum2(capsys):
    code, out = run(capsys, "--json", "enumerate", "--dim", "5", "--max-sum", "2")
    doc = json.loads(out)
    yes = [r["delta"] for r in doc["candidates"] if r["verdict"] == "yes"]
    assert yes == ["1 0 0 0 0 0", "1 0 0 1 0 0", "1 0 1 0 0 0", "1 1 0 0 0 0"]


def test_enumerate_low_dimension(capsys):
    code, out = run(capsys, "enumerate", "--dim", "2")
    assert code == 3 and "status out-of-scope" in out


def test_enumerate_realize_all(capsys):
    code, out = run(capsys, "--json", "enumerate", "--dim", "6", "--realize-all")
    doc = json.loads(out)
    assert code == 0 and doc["realized_failed"] == 0 and doc["realized_ok"] == doc["yes_count"]


def test_output_is_deterministic(section2_file, capsys):
    _, first = run(capsys, "delta", section2_file)
    _, second = run(capsys, "delta", section2_file)
    assert first == second


def test_json_and_kv_carry_same_delta(section2_file, capsys):
    _, kv = run(capsys, "delta", section2_file)
    _, js = run(capsys, "--json", "delta", section2_file)
    doc = json.loads(js)
    assert doc["delta"] == [1, 0, 1, 0]
    assert "delta 1 0 1 0" in kv
    assert doc["exit_code"] == 0
