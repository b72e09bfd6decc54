import json

import pytest

from config.settings import Settings
from main import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, run_command

CUBIC = """\
vars: x y z t
C = x*z - y^2, x*t - y*z, y*t - z^2
L = x, y
"""

KOSZUL = """\
vars: x y
d1 = [[x, y]]
d2 = [[-y], [x]]
"""


@pytest.fixture
def settings(regcheck_home, monkeypatch):
    monkeypatch.setenv("PROGRESS", "false")
    return Settings(regcheck_home)


@pytest.fixture
def cubic_file(tmp_path):
    path = tmp_path / "cubic.ideal"
    path.write_text(CUBIC, encoding="utf-8")
    return str(path)


def run_json(capsys, settings, *argv):
    code = run_command(["--json", *argv], settings)
    return code, json.loads(capsys.readouterr().out)


def test_invariants(capsys, settings, cubic_file):
    assert run_json(capsys, settings, "reg", "--ideal", cubic_file) == (EXIT_OK, {"reg": 2})
    assert run_json(capsys, settings, "deg", "--ideal", cubic_file) == (EXIT_OK, {"deg": 3})
    assert run_json(capsys, settings, "dim", "--ideal", cubic_file) == (EXIT_OK, {"dim": 2})
    assert run_json(capsys, settings, "depth", "--ideal", cubic_file) == (EXIT_OK, {"depth": 2})


def test_betti_json(capsys, settings, cubic_file):
    code, data = run_json(capsys, settings, "betti", "--ideal", cubic_file)
    assert code == EXIT_OK
    assert data["rows"] == {"0": {"0": 1}, "1": {"2": 3}, "2": {"3": 2}}
    assert data["regularity"] == 1


def test_member_check_exit_codes(capsys, settings, cubic_file):
    assert run_command(["member", "--ideal", cubic_file, "--poly", "x*z - y^2", "--check"], settings) == EXIT_OK
    assert "member = true" in capsys.readouterr().out
    assert run_command(["member", "--ideal", cubic_file, "--poly", "x", "--check"], settings) == EXIT_CHECK_FAILED
    assert run_command(["member", "--ideal", cubic_file, "--poly", "x"], settings) == EXIT_OK


def test_binary_operations(capsys, settings, cubic_file):
    code, data = run_json(capsys, settings, "quotient", "--ideal", cubic_file, "--name", "L", "--with", "L")
    assert code == EXIT_OK
    assert data["generators"] == ["1"]
    code, data = run_json(capsys, settings, "saturate", "--ideal", cubic_file, "--name", "C", "--with", "L")
    assert code == EXIT_OK
    assert data["steps"] >= 1
    code, data = run_json(capsys, settings, "same-radical", "--ideal", cubic_file, "--name", "C", "--with", "C")
    assert data == {"same_radical": True}


def test_verify_complex(tmp_path, capsys, settings):
    path = tmp_path / "koszul.ideal"
    path.write_text(KOSZUL, encoding="utf-8")
    code, data = run_json(capsys, settings, "verify-complex", "--ideal", str(path), "--matrices", "d1", "d2")
    assert code == EXIT_OK
    assert data["composition_zero"] is True
    assert data["buchsbaum_eisenbud"]["verdict"] is True


def test_curve_and_hilbert(capsys, settings):
    code, data = run_json(capsys, settings, "curve", "--degrees", "1", "2", "3")
    assert code == EXIT_OK
    assert len(data["generators"]) == 3


def test_appendix_count(capsys, settings):
    code, data = run_json(capsys, settings, "appendix-count", "--m", "1", "--n", "3", "--alpha", "12")
    assert code == EXIT_OK
    assert data["oracle"] == data["closed"] == 16 * 12 - 8
    assert run_command(["appendix-count", "--m", "1", "--n", "3", "--alpha", "2", "--mode", "closed"], settings) == EXIT_INPUT_ERROR


def test_family_bundle_to_file(tmp_path, capsys, settings):
    out = tmp_path / "cm.ideal"
    assert run_command(["--out", str(out), "family", "cm", "1", "1"], settings) == EXIT_OK
    text = out.read_text(encoding="utf-8")
    assert "vars: x y z t" in text
    assert "gamma = [[" in text
    assert run_command(["family", "cm", "1"], settings) == EXIT_INPUT_ERROR


def test_suite_list(capsys, settings):
    assert run_command(["suite", "list"], settings) == EXIT_OK
    out = capsys.readouterr().out
    assert "ex21" in out
    assert "ex35" in out


def test_input_errors(tmp_path, settings):
    bad = tmp_path / "bad.ideal"
    bad.write_text("vars: x y\nI = x + * y\n", encoding="utf-8")
    assert run_command(["gb", "--ideal", str(bad)], settings) == EXIT_INPUT_ERROR
    assert run_command(["gb", "--ideal", str(tmp_path / "missing.ideal")], settings) == EXIT_INPUT_ERROR
    assert run_command(["frobnicate"], settings) == EXIT_INPUT_ERROR


def test_invalid_configuration(regcheck_home, monkeypatch, cubic_file):
    monkeypatch.setenv("DEFAULT_CHARACTERISTIC", "4")
    assert run_command(["reg", "--ideal", cubic_file], Settings(regcheck_home)) == EXIT_INPUT_ERROR
