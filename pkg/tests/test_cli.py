import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from fourierqc.cli import main
from fourierqc.linalg import matrix_from_csv, matrix_from_json

CIRCUITS = Path(__file__).parent.parent / "circuits"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_exit_zero_and_json(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--json", report)
    assert code == 0
    assert "inequalities hold" in out
    rows = json.loads(report.read_text())
    assert all(r["pass"] == r["expect_equal"] for r in rows)


def test_verify_impossible_tolerance_fails(capsys):
    code, out, _ = run(capsys, "verify", "--tol", "0")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("other", ["bell_b.fqc", "bell_c.fqc"])
def test_equiv_bell_variants(capsys, other):
    code, out, _ = run(capsys, "equiv", CIRCUITS / "bell_a.fqc", CIRCUITS / other)
    assert code == 0 and out.rstrip().endswith("equivalent")


def test_equiv_not_equivalent(capsys):
    code, out, _ = run(capsys, "equiv", CIRCUITS / "qft3.fqc", CIRCUITS / "toffoli.fqc")
    assert code == 1 and "not equivalent" in out


def test_equiv_width_mismatch(capsys):
    code, _, err = run(capsys, "equiv", CIRCUITS / "bell.fqc", CIRCUITS / "toffoli.fqc")
    assert code == 1 and "width" in err


def test_sim_bell(capsys):
    code, out, _ = run(capsys, "sim", CIRCUITS / "bell.fqc")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0 |00>  0.707106781186548 0"
    assert lines[3] == "3 |11>  0.707106781186548 0"
    assert lines[1].endswith("0 0") and lines[2].endswith("0 0")


def test_sim_state_is_q0_rightmost(capsys):
    _, out, _ = run(capsys, "sim", CIRCUITS / "toffoli.fqc", "--state", "011")
    assert "7 |111>  1 0" in out


def test_sim_branches(capsys):
    code, out, _ = run(capsys, "sim", CIRCUITS / "ghz3.fqc", "--branches", "--measure", "0")
    assert code == 0
    assert out.splitlines()[0].startswith("0  p=0.5  post=[1 0  0 0  0 0  0 0]")


def test_sim_json_and_shots(capsys):
    _, out, _ = run(capsys, "sim", CIRCUITS / "bell.fqc", "--json")
    assert np.allclose(np.array(json.loads(out))[:, 0], [2**-0.5, 0, 0, 2**-0.5])
    _, out, _ = run(capsys, "sim", CIRCUITS / "bell.fqc", "--shots", "100", "--seed", "3")
    counts = dict(line.split() for line in out.splitlines())
    assert set(counts) <= {"00", "11"} and sum(map(int, counts.values())) == 100


@pytest.mark.parametrize("fmt, reader", [("json", matrix_from_json), ("csv", matrix_from_csv)])
def test_matrix(capsys, fmt, reader):
    from fourierqc.dsl import load

    code, out, _ = run(capsys, "matrix", CIRCUITS / "qft3.fqc", "--format", fmt)
    assert code == 0
    assert np.array_equal(reader(out), load(CIRCUITS / "qft3.fqc").unitary())


@pytest.mark.parametrize("variant", ["a", "b", "c", "d"])
def test_teleport(capsys, variant):
    code, out, _ = run(capsys, "teleport", "--alpha", "0.6,0", "--beta", "0,0.8", "--variant", variant)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4 and all("p=0.25" in l and "fidelity=1" in l for l in lines)


def test_teleport_json(capsys):
    _, out, _ = run(capsys, "teleport", "--alpha", "1,0", "--beta", "0,0", "--json")
    assert [r["correction"] for r in json.loads(out)] == ["I", "Z", "X", "XZ"]


@pytest.mark.parametrize("parties", [3, 4])
def test_qss(capsys, parties):
    code, out, _ = run(capsys, "qss", "--parties", parties, "--variant", "e",
                       "--alpha", "1,1", "--beta", "0,1", "--normalize")
    assert code == 0 and len(out.splitlines()) == 2**parties


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    entries = {e["name"]: e for e in json.loads(out)}
    assert code == 0
    assert entries["ccx"]["arity"] == 3
    assert np.array_equal(matrix_from_json(json.dumps(entries["cx"]["matrix"]))[3, 1], 1)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["matrix", "circuits/bell.fqc"],
        ["teleport", "--alpha", "1", "--beta", "0,0"],
        ["teleport", "--alpha", "1,0", "--beta", "1,0"],
        ["qss", "--parties", "5", "--alpha", "1,0", "--beta", "0,0"],
        ["sim", str(CIRCUITS / "bell.fqc"), "--state", "1"],
        ["sim", str(CIRCUITS / "bell.fqc"), "--branches", "--measure", "4"],
        ["equiv", "a", "b", "--tol", "-1"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert_exit(argv, 2)


def assert_exit(argv, code):
    try:
        got = main(argv)
    except SystemExit as e:
        got = e.code
    assert got == code


def test_parse_error_exit_1_with_location(capsys, tmp_path):
    bad = tmp_path / "bad.fqc"
    bad.write_text("qubits 2\nh 0\ncx 0 7\n")
    code, _, err = run(capsys, "sim", bad)
    assert code == 1
    assert f"{bad}:3:6:" in err


def test_missing_file_exit_1(capsys, tmp_path):
    code, _, err = run(capsys, "sim", tmp_path / "nope.fqc")
    assert code == 1 and "error" in err


def test_output_is_deterministic(capsys):
    outs = [run(capsys, "teleport", "--alpha", "0.28,0.96", "--beta", "0,0", "--variant", "c")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fourierqc.cli", "sim", str(CIRCUITS / "bell.fqc")],
                          capture_output=True, text=True, check=True)
    assert "0.707106781186548" in proc.stdout
