"""Command-line interface: outputs, determinism, exit codes, caching."""

import json
import subprocess
import sys


def run_cli(*args, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([sys.executable, "-m", "nsjack.cli", *args],
                          capture_output=True, text=True, env=full_env)


def test_jack_output_bytes():
    r = run_cli("jack", "--eta", "1,0", "--n", "2", "--alpha", "1")
    assert r.returncode == 0
    assert json.loads(r.stdout) == {
        "n": 2, "terms": [[[1, 0], "1", "1"], [[0, 1], "1", "2"]]}
    # deterministic byte-for-byte
    r2 = run_cli("jack", "--eta", "1,0", "--n", "2", "--alpha", "1")
    assert r.stdout == r2.stdout


def test_eval_ones():
    r = run_cli("eval-ones", "--eta", "1,0", "--n", "2", "--alpha", "1")
    assert r.returncode == 0
    assert r.stdout.strip() == '"3/2"'


def test_norm_families():
    r = run_cli("norm", "--family", "ct", "--eta", "1,0", "--n", "2",
                "--k", "1")
    assert r.returncode == 0 and r.stdout.strip() == '"3/2"'
    r = run_cli("norm", "--family", "hermite", "--eta", "1,0", "--n", "2",
                "--alpha", "2")
    assert r.returncode == 0 and r.stdout.strip() == '"2/3"'
    r = run_cli("norm", "--family", "laguerre", "--eta", "0,0", "--n", "2",
                "--alpha", "2", "--a", "1/2")
    assert r.returncode == 0 and r.stdout.strip() == '"1"'


def test_laguerre_serialization_flag():
    plain = run_cli("laguerre", "--eta", "1,0", "--n", "2", "--alpha", "1",
                    "--a", "0")
    squared = run_cli("laguerre", "--eta", "1,0", "--n", "2", "--alpha", "1",
                      "--a", "0", "--x-squared")
    terms = json.loads(plain.stdout)["terms"]
    terms_sq = json.loads(squared.stdout)["terms"]
    assert [t[0] for t in terms] == [[1, 0], [0, 1], [0, 0]]
    assert [t[0] for t in terms_sq] == [[2, 0], [0, 2], [0, 0]]


def test_binomial_command():
    r = run_cli("binomial", "--eta", "1,1", "--nu", "1,0", "--n", "2",
                "--alpha", "1")
    assert r.returncode == 0 and r.stdout.strip() == '"3/2"'


def test_kernel_command():
    r = run_cli("kernel", "--family", "A", "--degree", "2", "--n", "1",
                "--alpha", "1")
    assert json.loads(r.stdout) == {
        "n": 2,
        "terms": [[[2, 2], "1", "2"], [[1, 1], "1", "1"], [[0, 0], "1", "1"]]}


def test_usage_errors_exit_2():
    assert run_cli("jack", "--eta", "1,x", "--n", "2").returncode == 2
    assert run_cli("jack", "--eta", "1,0", "--n", "3").returncode == 2
    assert run_cli("jack", "--eta", "1,0", "--alpha", "0").returncode == 2
    assert run_cli("verify", "--suite", "nonsense").returncode == 2
    assert run_cli("norm", "--family", "ct", "--eta", "1,0", "--n", "2",
                   "--alpha", "3", "--k", "2").returncode == 2


def test_verify_suite_exit_0():
    r = run_cli("verify", "--suite", "ct", "--max-weight", "2", "--max-n", "2")
    assert r.returncode == 0
    reports = json.loads(r.stdout)
    assert reports and all(rep["status"] == "pass" for rep in reports)


def test_verify_csv_and_out(tmp_path):
    out = tmp_path / "report.csv"
    r = run_cli("verify", "--suite", "jack", "--max-weight", "2", "--max-n",
                "2", "--alpha-set", "1", "--format", "csv", "--out", str(out))
    assert r.returncode == 0
    text = out.read_text()
    assert "status" in text.splitlines()[0]
    assert "fail" not in text


def test_cache_dir(tmp_path):
    env = {"NSJACK_CACHE_DIR": str(tmp_path)}
    r1 = run_cli("jack", "--eta", "2,1", "--n", "2", "--alpha", "1/2", env=env)
    files = list(tmp_path.iterdir())
    assert files, "cache file should have been written"
    r2 = run_cli("jack", "--eta", "2,1", "--n", "2", "--alpha", "1/2", env=env)
    assert r1.stdout == r2.stdout
