"""End-to-end checks of the command line surface: subcommands, file
formats, exit codes, caching, and determinism across worker counts."""

import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ["SPLINTERLAB_CLI"]
DATA = Path(os.environ.get("SPLINTERLAB_DATA", "data"))


def run(*args, cwd=None, env=None):
    full_env = dict(os.environ)
    full_env.pop("SPLINTERLAB_CACHE", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, cwd=cwd, env=full_env)


def test_usage_errors_exit_2():
    assert run().returncode == 2
    assert run("census").returncode != 0  # missing --query
    assert run("--problem", "lp", "faces").returncode == 2
    assert run("probe", "--strategy", "bogus").returncode == 2


def test_gen_random_is_seeded(tmp_path):
    a = run("--n", "3", "--seed", "9", "gen", "--kind", "random")
    b = run("--n", "3", "--seed", "9", "gen", "--kind", "random")
    c = run("--n", "3", "--seed", "10", "gen", "--kind", "random")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout != c.stdout
    doc = json.loads(a.stdout)
    assert doc["problem"] == "tsp"
    assert len(doc["costs"]) == 12


def test_gen_witnesses(tmp_path):
    out = tmp_path / "interior.json"
    res = run("--n", "3", "--out", str(out), "gen", "--kind", "interior")
    assert res.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["costs"].count("0") == 4

    res = run("--n", "3", "gen", "--kind", "face", "--sprime", "2")
    assert json.loads(res.stdout)["costs"].count("0") == 7


def test_faces_cache_round_trip(tmp_path):
    cache = tmp_path / "cache"
    first = run("--n", "3", "--cache-dir", str(cache), "faces")
    assert first.returncode == 0
    cached = run("--n", "3", "--cache-dir", str(cache), "faces")
    assert cached.stdout == first.stdout
    audited = run("--n", "3", "--cache-dir", str(cache), "--no-cache", "faces")
    assert audited.returncode == 0
    assert audited.stdout == first.stdout

    doc = json.loads(first.stdout)
    assert len(doc["sets"]) == 6
    assert all(entry["facet_count"] == 5 for entry in doc["sets"])

    # a corrupted cache entry is detected in audit mode
    entries = list(cache.glob("faces_*.json"))
    assert len(entries) == 1
    entries[0].write_text(first.stdout.replace("facet_count", "facet_cnt"))
    broken = run("--n", "3", "--cache-dir", str(cache), "--no-cache", "faces")
    assert broken.returncode == 1


def test_faces_csv_format(tmp_path):
    res = run("--n", "3", "--format", "csv", "--cache-dir", str(tmp_path / "c"), "faces")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "set,label,facet,witness"
    assert len(lines) == 1 + 30


def test_classify_paths_agree(tmp_path):
    query = tmp_path / "query.json"
    query.write_text(json.dumps({
        "dim": 12,
        "vector": ["1", "-1"] + ["0"] * 10,
        "id": "e01-e02",
    }))
    res = run("--n", "3", "classify", "--query", str(query), "--set", "0")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["agreement"] is True
    assert doc["algebraic"]["verdict"] == "spL"
    assert doc["geometric"]["verdict"] == "spL"


def test_verify_tree_bundled_and_failing(tmp_path):
    bundled = DATA / "tournament_tsp_n3.json"
    res = run("verify-tree", "--tree", str(bundled))
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["solved"] is True
    assert doc["cells_certified"] == 32

    res = run("--n", "3", "verify-tree", "--tournament")
    assert res.returncode == 0

    # a one-comparison tree cannot separate six solution cones
    stub = tmp_path / "stub.json"
    tree = json.loads(bundled.read_text())
    stub.write_text(json.dumps({
        "problem": "tsp", "n": 3,
        "nodes": {"": tree["nodes"][""]},
        "leaves": {"+": 0, "-": 1},
    }))
    res = run("verify-tree", "--tree", str(stub))
    assert res.returncode == 1
    assert json.loads(res.stdout)["solved"] is False


def test_census_reports_and_exit_codes(tmp_path):
    query = tmp_path / "query.json"
    query.write_text(json.dumps({"vector": ["1", "-1"] + ["0"] * 10, "id": "e01-e02"}))

    runs = [run("--n", "3", "--seed", "1", "--jobs", str(jobs), "census",
                "--query", str(query)) for jobs in (1, 4, 1)]
    assert all(r.returncode == 0 for r in runs)
    assert runs[0].stdout == runs[1].stdout == runs[2].stdout
    doc = json.loads(runs[0].stdout)
    assert doc["counts"]["spL"] == 6
    assert doc["e_after_plus"] == doc["e_before"] - doc["one_sided_minus"]

    # unbalanced query: all six splinter, still exit 0
    unbalanced = tmp_path / "unbalanced.json"
    unbalanced.write_text(json.dumps({"vector": ["1"] + ["0"] * 11}))
    res = run("--n", "3", "census", "--query", str(unbalanced))
    assert res.returncode == 0
    assert json.loads(res.stdout)["counts"]["spL"] == 6

    # the desk-scale cap refuses n=6
    big = tmp_path / "big.json"
    big.write_text(json.dumps({"vector": ["1", "-1"] + ["0"] * 40}))
    res = run("--n", "6", "census", "--query", str(big))
    assert res.returncode == 3


def test_census_csv_certificates(tmp_path):
    query = tmp_path / "query.json"
    query.write_text(json.dumps({"vector": ["1", "-1"] + ["0"] * 10}))
    out = tmp_path / "census.csv"
    res = run("--n", "3", "--format", "csv", "--out", str(out), "census",
              "--query", str(query))
    assert res.returncode == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "set,verdict,side,certificate"
    assert len(lines) == 7
    assert (tmp_path / "census.csv.certs.json").exists()


def test_census_stream_file(tmp_path):
    stream = tmp_path / "stream.json"
    stream.write_text(json.dumps({
        "queries": [{"vector": ["1", "-1"] + ["0"] * 10, "id": "s0"}],
        "signs": [1],
    }))
    query = tmp_path / "query.json"
    query.write_text(json.dumps({"vector": ["0", "0", "1", "-1"] + ["0"] * 8}))
    res = run("--n", "3", "census", "--query", str(query), "--stream", str(stream))
    assert res.returncode == 0
    assert json.loads(res.stdout)["stream_length"] == 1

    # proportional repeat is a usage error
    repeat = tmp_path / "repeat.json"
    repeat.write_text(json.dumps({"vector": ["2", "-2"] + ["0"] * 10}))
    res = run("--n", "3", "census", "--query", str(repeat), "--stream", str(stream))
    assert res.returncode == 2


def test_probe_determinism():
    args = ("--n", "3", "--seed", "4", "probe", "--strategy", "coordinate-difference",
            "--trials", "66")
    a, b = run(*args), run(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert doc["best_census"]["counts"]["spL"] == 6
    assert len(doc["trials"]) == 66


def test_coverage_csv():
    res = run("--n", "3", "--seed", "2", "--format", "csv", "coverage",
              "--tournament", "--samples", "10")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "set,facet,samples,covered"
    assert len(lines) == 1 + 30
    root = next(line for line in lines[1:] if line.startswith("0,0-1,"))
    assert root.endswith(",10,10")


def test_cache_env_var_overrides_flag(tmp_path):
    env_cache = tmp_path / "env-cache"
    flag_cache = tmp_path / "flag-cache"
    res = run("--n", "3", "--cache-dir", str(flag_cache), "faces",
              env={"SPLINTERLAB_CACHE": str(env_cache)})
    assert res.returncode == 0
    assert env_cache.exists()
    assert not flag_cache.exists()
