"""Acceptance gate: every criterion at its stated tolerance, seed 0.

Each test prints its own PASS/FAIL line (run with ``pytest -s`` to see them
inline); the same checks back the ``nkerr validate`` command.
"""

import json
import subprocess
import sys

import pytest

from nkerr import validate

RESULTS = {r.number: r for r in validate.run_all(seed=0)}


@pytest.mark.parametrize("number", sorted(RESULTS))
def test_criterion(number):
    result = RESULTS[number]
    status = "PASS" if result.passed else "FAIL"
    print(f"criterion {number:02d} {result.name}: {status}")
    assert result.passed, f"criterion {number} ({result.name}): {result.detail}"


def test_validate_command_exits_zero_on_seed_zero(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "nkerr.cli", "validate", "--seed", "0"],
                          capture_output=True, text=True)
    print(proc.stdout, end="")
    assert proc.returncode == 0
    assert proc.stdout.count("PASS") == 11
    assert "FAIL" not in proc.stdout


def test_sweep_command_byte_identical_across_processes(tmp_path):
    scenario = {
        "modes": {
            "a": {"g_re": 0.05, "g_im": 0.0, "delta": 0.0, "n": 1},
            "b": {"g_re": 1.0, "g_im": 0.0, "delta": 0.0, "n": 0},
            "c": {"g_re": 0.05, "g_im": 0.0, "delta": 0.0, "n": 1},
        },
        "gamma": {"g1": 0.0, "g2": 0.0, "g3": 0.4},
    }
    spath = tmp_path / "scenario.json"
    spath.write_text(json.dumps(scenario), encoding="utf-8")
    blobs = []
    for name in ("one.csv", "two.csv"):
        opath = tmp_path / name
        proc = subprocess.run(
            [sys.executable, "-m", "nkerr.cli", "sweep", str(spath), "--axis", "dc",
             "--lo", "-2", "--hi", "2", "--steps", "101", "--out", str(opath)],
            capture_output=True, text=True)
        assert proc.returncode == 0
        blobs.append(opath.read_bytes())
    assert blobs[0] == blobs[1]
    header = blobs[0].decode("utf-8").splitlines()[0]
    assert header == "axis,value,chi1_re,chi1_im,chi3s_re,chi3s_im,chi3c_re,chi3c_im,valid"
