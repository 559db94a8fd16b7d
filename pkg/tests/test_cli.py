import json
import subprocess
import sys
from pathlib import Path

import pytest

from kashiwara.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,expected", [
    (["nf", "E[1]*f[1]"], "1 + r*s^-1*f[1]*E[1]"),
    (["nf", "e[1]*w[1]", "--parent", "U"], "r^-1*s*w[1]*e[1]"),
    (["pair", "e[1]*e[1]", "f[1]*f[1]"], "(r*s^-1 + 1)/(r^2 - 2*r*s + s^2)"),
    (["gamma", "--height", "1"], "grade (0): 1\ngrade (1): -f[1]*E[1]"),
])
def test_text_output(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_closed_form_matches_gamma(capsys):
    _, a, _ = run(capsys, "gamma", "--height", "4")
    _, b, _ = run(capsys, "gamma", "--height", "4", "--closed-form")
    assert a == b


@pytest.mark.parametrize("verb", [["coprod", "e[1]"], ["antipode", "f[1]"],
                                  ["antipode", "f[1]", "--inverse"], ["phi", "P[1]"],
                                  ["casimir", "--height", "2"], ["gram", "A2", "1,1"],
                                  ["dual", "1,1", "--type", "A2"], ["verma", "--verify", "all"]])
def test_verbs_succeed_and_emit_json(capsys, verb):
    code, out, _ = run(capsys, *verb, "--json")
    assert code == 0
    json.loads(out)


@pytest.mark.parametrize("argv", [
    ["nf", "e[1]+"],
    ["nf", "e[3]"],
    ["verify", "relations", "--type", "C9"],
    ["verify", "relations", "--height", "9"],
    ["gamma", "--closed-form", "--type", "A2"],
    ["verma", "--lambda", "1,2"],
])
def test_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_parse_error_names_column(capsys):
    _, _, err = run(capsys, "nf", "e[1]+")
    assert "column 5" in err


def test_failing_verify_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "relations", "--mutate")
    assert code == 1 and "FAIL" in out


def test_config_file_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("type = A2\nheight = 2\nsamples = 3\nlambda = 0,0; 1,0\n")
    _, out, _ = run(capsys, "verify", "casimir", "--config", str(cfg), "--json")
    config = json.loads(out)["config"]
    assert (config["type"], config["height"], config["samples"]) == ("A2", 2, 3)
    assert config["lambdas"] == ["0,0", "1,0"]
    _, out, _ = run(capsys, "verify", "casimir", "--config", str(cfg), "--height", "1", "--json")
    assert json.loads(out)["config"]["height"] == 1


@pytest.mark.parametrize("body", ["height = x\n", "colour = red\n", "type = Z5\n"])
def test_bad_config_file(tmp_path, capsys, body):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text(body)
    code, _, err = run(capsys, "verify", "casimir", "--config", str(cfg))
    assert code == 2 and "error" in err


def test_missing_config_file(capsys):
    code, _, _ = run(capsys, "verify", "casimir", "--config", "/nonexistent/x.cfg")
    assert code == 2


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "kashiwara", *argv], capture_output=True)


def test_json_is_byte_identical_across_processes():
    first = _cli("verify", "pairing", "--type", "A2", "--height", "2", "--json")
    second = _cli("verify", "pairing", "--type", "A2", "--height", "2", "--json")
    assert first.returncode == 0 and first.stdout == second.stdout


@pytest.mark.parametrize("type_", ["A1", "A2"])
def test_golden_verify_all(capsys, type_):
    code, out, _ = run(capsys, "verify", "all", "--type", type_, "--json")
    assert code == 0
    assert out == (GOLDEN / f"verify_all_{type_}.json").read_text()
