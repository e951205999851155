import io
import json
import subprocess
import sys

import pytest

from avoidance_lab.cli import run

from cli_corpus import CORPUS, DETERMINISM


def call(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv,expected", CORPUS, ids=[" ".join(a) for a, _ in CORPUS])
def test_matches_library(argv, expected):
    code, text = call(argv)
    assert code == 0
    assert text.rstrip("\n") == expected()


@pytest.mark.parametrize("argv", [
    ["contains", "136/5/27", "14/23"],
    ["contains", "1//2", "1"],
    ["count", "--pattern", "12x", "--n", "3"],
    ["contains-tuple", "12|21", "12"],
    ["project", "--hg", "1,2;3", "--drop", "1"],
    ["certify-lower", "--pattern", "14/23", "--n", "4"],
    ["count", "--pattern", "123"],
    ["no-such-command"],
])
def test_validation_errors_exit_2(argv, capsys):
    code, text = call(argv)
    assert code == 2
    assert text == ""
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and "error" in err[0]


@pytest.mark.parametrize("argv", [
    ["count", "--pattern", "123", "--n", "13"],
    ["pm-dist", "--n", "15"],
    ["count-tuples", "--pattern", "12|21", "--n", "12"],
    ["max-weight", "--hg", "1;2", "--n", "11", "--budget", "10"],
])
def test_resource_limit_exit_3(argv):
    assert call(argv)[0] == 3


def test_json_envelope():
    code, text = call(["--json", "count", "--pattern", "123", "--n", "5"])
    assert code == 0 and text.count("\n") == 1
    env = json.loads(text)
    assert list(env) == ["command", "inputs", "result", "elapsed_ms"]
    assert env["command"] == "count" and env["result"] == 26
    assert env["inputs"] == {"n": 5, "no_singletons": False, "pattern": "123", "seed": 0}


def test_json_flag_after_subcommand():
    assert json.loads(call(["count", "--pattern", "123", "--n", "5", "--json"])[1])["result"] == 26


@pytest.mark.parametrize("argv", [a for a, _ in CORPUS], ids=[" ".join(a) for a, _ in CORPUS])
def test_json_stable(argv):
    def payload():
        env = json.loads(call(["--json"] + argv)[1])
        env.pop("elapsed_ms")
        return json.dumps(env, sort_keys=True)

    assert payload() == payload()


def test_csv_sequence():
    code, text = call(["--csv", "seq", "--pattern", "123", "--nmax", "4"])
    assert text == "n,value\n1,1\n2,2\n3,4\n4,10\n"


def test_boolean_output():
    assert call(["contains", "1/2/3", "12"])[1] == "false\n"


@pytest.mark.parametrize("argv", DETERMINISM, ids=[" ".join(a) for a in DETERMINISM])
def test_threads_do_not_change_output(argv):
    one = call(argv + ["--threads", "1"])
    four = call(argv + ["--threads", "4"])
    assert one == four and one[0] == 0


def test_cache_dir(tmp_path):
    argv = ["--cache-dir", str(tmp_path), "seq", "--pattern", "123", "--nmax", "5"]
    first = call(argv)
    assert (tmp_path / "counts.jsonl").read_text().count("\n") == 5
    assert call(argv) == first


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("AVOIDANCE_LAB_CACHE", str(tmp_path))
    call(["count", "--pattern", "1/2/3", "--n", "6"])
    assert (tmp_path / "counts.jsonl").exists()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "avoidance_lab", "count", "--pattern", "123", "--n", "6"],
                          capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "76\n")
