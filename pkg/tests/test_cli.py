from __future__ import annotations

import csv
import io
import json
import math
import subprocess
import sys
from fractions import Fraction

import pytest

from gevrey.cli import WIRE_KEYS, parse_point, parse_rational, parse_theta, run


@pytest.mark.parametrize(
    "text,value",
    [("0", 0.0), ("pi/8", math.pi / 8), ("-3pi/4", -3 * math.pi / 4), ("pi", math.pi), ("0.25", 0.25), ("2*pi/3", 2 * math.pi / 3)],
)
def test_parse_theta(text, value):
    assert parse_theta(text) == pytest.approx(value)


def test_parse_points():
    assert parse_rational("-1/3") == Fraction(-1, 3)
    assert parse_point("2+1i") == (Fraction(2), Fraction(1))
    assert parse_point("1/2-3/4i") == (Fraction(1, 2), Fraction(-3, 4))
    assert parse_point("0.5") == Fraction(1, 2)


def test_sum_gompertz(capsys):
    assert run(["sum", "--a", "1", "--k", "1", "--z", "1", "--bits", "256", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["re_mid"].startswith("0.5963473623231940743410784993692793760741778601525487815734")


def test_eval_exp(capsys):
    assert run(["eval", "--family", "exp", "--z", "1", "--bits", "200", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["re_mid"].startswith("2.71828182845904523536028747135266249775724709369995")


def test_anti_stokes_is_usage_error(capsys):
    code = run(["sum", "--a", "1/2", "--z", "-1", "--theta", "pi"])
    err = capsys.readouterr().err
    assert code == 2 and "suggested" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["verify", "--suite", "I99"],
        ["eval", "--z", "1", "--bits", "10"],
        ["sum", "--a", "1", "--z", "0"],
        ["verify", "--suite", "I3", "--out", "/nonexistent/dir/report.json"],
    ],
)
def test_usage_errors(argv):
    assert run(argv) == 2


def test_bits_cap(monkeypatch):
    monkeypatch.setenv("GEVREY_MAX_BITS", "256")
    assert run(["eval", "--z", "1", "--bits", "512"]) == 2


def test_verify_failure_exit_code(capsys):
    assert run(["verify", "--suite", "I6", "--bits", "128", "--jobs", "1"]) == 1
    assert "fail" in capsys.readouterr().out


def _strip(rows):
    return [{k: v for k, v in r.items() if k != "seconds"} for r in rows]


def test_json_is_deterministic(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path, jobs in zip(paths, ("1", "2")):
        assert run(["verify", "--suite", "I3,I12", "--bits", "128", "--jobs", jobs, "--format", "json", "--out", str(path)]) == 0
    a, b = (json.loads(p.read_text()) for p in paths)
    assert _strip(a) == _strip(b)
    assert all(set(row) == set(WIRE_KEYS) for row in a)
    assert all(isinstance(row["lhs_mid"], str) for row in a)


def test_csv_and_text(capsys):
    assert run(["verify", "--suite", "I12", "--bits", "128", "--jobs", "1", "--format", "csv"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert tuple(rows[0]) == WIRE_KEYS and len(rows) == 4
    assert run(["verify", "--suite", "I12", "--bits", "128", "--jobs", "1"]) == 0
    text = capsys.readouterr().out
    assert text.count("pass") == 3


def test_probe(capsys):
    assert run(["probe", "--kind", "conjecture3", "--a", "1", "--s", "1", "--digits", "150", "--height", "10^12", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "none_up_to_height"
    assert run(["probe", "--kind", "mixed", "--alpha", "1", "--rho", "1", "--digits", "20", "--height", "1e12"]) == 1


def test_list(capsys):
    assert run(["list", "--format", "json"]) == 0
    entries = json.loads(capsys.readouterr().out)
    assert [e["id"] for e in entries] == [f"I{i}" for i in range(1, 13)]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gevrey", "list"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("I1")
