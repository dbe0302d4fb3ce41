import json
import subprocess
import sys

import pytest

from mullineux.cache import Cache
from mullineux.cli import main

COMMANDS = [
    ["compute", "-e", "3", "3,1,1"],
    ["compute", "-e", "3", "2"],
    ["fixed", "-e", "3", "-n", "5"],
    ["fixed", "-e", "3", "-n", "5", "--profile"],
    ["crystal", "export", "--kind", "typea", "-e", "3", "--bound", "4", "--format", "dot"],
    ["crystal", "export", "--kind", "typea", "-e", "3", "--bound", "4", "--format", "jsonl"],
    ["crystal", "export", "--kind", "odd", "--ell", "1", "--bound", "5", "--format", "jsonl"],
    ["crystal", "export", "--kind", "even", "--ell", "2", "--bound", "5", "--format", "dot"],
    ["twisted", "path", "--kind", "odd", "--ell", "1", "2,1"],
    ["eta", "--kind", "odd", "--ell", "1", "2"],
    ["eta", "--kind", "odd", "--ell", "1", "--check", "2,1"],
    ["bijection", "dp2sp", "4,2,1"],
    ["bijection", "sp2dp", "4,3,3,1"],
    ["fold-cartan", "-e", "5"],
    ["verify", "--kind", "odd", "--ell", "1", "--max-deg", "2"],
    ["verify", "--kind", "even", "--ell", "1", "--max-deg", "4", "--json"],
    ["alt-count", "-e", "3", "-n", "5"],
]


def run_cli(args, tmp_path):
    return subprocess.run(
        [sys.executable, "-m", "mullineux", *args],
        capture_output=True, text=True,
        env={"PATH": "", "MULLINEUX_CACHE_DIR": str(tmp_path / "cache")},
    )


def test_compute_output(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MULLINEUX_CACHE_DIR", str(tmp_path / "cache"))
    assert main(["compute", "-e", "3", "3,1,1"]) == 0
    assert capsys.readouterr().out == "3,1,1\n"
    assert main(["compute", "-e", "3", "2"]) == 0
    assert capsys.readouterr().out == "1,1\n"


def test_fold_cartan_output(capsys):
    assert main(["fold-cartan", "-e", "5"]) == 0
    assert capsys.readouterr().out == "2 -2 0\n-1 2 -2\n0 -1 2\n"
    assert main(["fold-cartan", "-e", "2"]) == 0
    assert capsys.readouterr().out == "2 -2\n-2 2\n"


def test_twisted_path_and_eta(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MULLINEUX_CACHE_DIR", str(tmp_path / "cache"))
    assert main(["twisted", "path", "--kind", "odd", "--ell", "1", "2,1"]) == 0
    assert capsys.readouterr().out == "0,1,0\n"
    assert main(["twisted", "path", "--kind", "odd", "--ell", "1", "-"]) == 0
    assert capsys.readouterr().out == "-\n"
    assert main(["eta", "--kind", "odd", "--ell", "1", "2"]) == 0
    assert capsys.readouterr().out == "3,1,1\n"


def test_eta_check_emits_json_report(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MULLINEUX_CACHE_DIR", str(tmp_path / "cache"))
    assert main(["eta", "--kind", "even", "--ell", "2", "--check", "2,1"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["ok"] is True
    assert all(check["passed"] for check in blob["checks"])


def test_bijection_round_trip(capsys):
    assert main(["bijection", "dp2sp", "4,2,1"]) == 0
    assert capsys.readouterr().out == "4,3,3,1\n"
    assert main(["bijection", "sp2dp", "4,3,3,1"]) == 0
    assert capsys.readouterr().out == "4,2,1\n"


def test_fixed_profile_records(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MULLINEUX_CACHE_DIR", str(tmp_path / "cache"))
    assert main(["fixed", "-e", "3", "-n", "5", "--profile"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record == {"n": 5, "partition": [3, 1, 1], "residue_profile": [1, 2, 2]}
    assert main(["fixed", "-e", "3", "-n", "2"]) == 0
    assert capsys.readouterr().out == ""


def test_alt_count(capsys):
    assert main(["alt-count", "-e", "3", "-n", "5"]) == 0
    assert capsys.readouterr().out == "4\n"


def test_verify_exit_codes(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MULLINEUX_CACHE_DIR", str(tmp_path / "cache"))
    assert main(["verify", "--kind", "odd", "--ell", "1", "--max-deg", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "degree lhs rhs-from-counts rhs-from-crystal status"
    assert out.splitlines()[-1] == "PASS"
    assert main(["verify", "--kind", "even", "--ell", "1", "--max-deg", "3",
                 "--json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["ok"] is True and len(blob["rows"]) == 4


def test_usage_errors(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MULLINEUX_CACHE_DIR", str(tmp_path / "cache"))
    # malformed literal
    assert main(["compute", "-e", "3", "3,4"]) == 2
    assert "error:" in capsys.readouterr().err
    # partition outside the command's domain
    assert main(["compute", "-e", "3", "1,1,1"]) == 2
    capsys.readouterr()
    assert main(["bijection", "dp2sp", "2,2"]) == 2
    capsys.readouterr()
    assert main(["eta", "--kind", "odd", "--ell", "1", "3"]) == 2
    capsys.readouterr()
    assert main(["fold-cartan", "-e", "1"]) == 2
    capsys.readouterr()
    assert main(["crystal", "export", "--kind", "typea", "--bound", "2",
                 "--format", "dot"]) == 2
    capsys.readouterr()
    # unknown command exits 2 via argparse
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_jsonl_export_shape(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MULLINEUX_CACHE_DIR", str(tmp_path / "cache"))
    assert main(["crystal", "export", "--kind", "odd", "--ell", "1",
                 "--bound", "3", "--format", "jsonl"]) == 0
    lines = capsys.readouterr().out.splitlines()
    header = json.loads(lines[0])
    assert header["kind"] == "odd" and header["ell"] == 1
    vertices = [json.loads(line) for line in lines[1:-1]]
    assert vertices[0] == {"n": 0, "partition": []}
    assert {"n": 3, "partition": [2, 1]} in vertices
    edges = json.loads(lines[-1])["edges"]
    assert {"from": [], "res": 0, "to": [1]} in edges


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: " ".join(a))
def test_byte_identical_across_runs_and_cache_states(args, tmp_path):
    cold = run_cli(args, tmp_path)
    assert cold.returncode == 0, cold.stderr
    warm = run_cli(args, tmp_path)
    assert warm.returncode == 0, warm.stderr
    assert cold.stdout == warm.stdout
    assert cold.stdout  # every command prints something


def test_cache_corruption_is_a_miss(tmp_path):
    cache = Cache(tmp_path / "c")
    cache.put(("fixed", "e3", "n5"), "payload\n")
    assert cache.get(("fixed", "e3", "n5")) == "payload\n"
    path = cache._path(("fixed", "e3", "n5"))
    path.write_text(path.read_text().replace("payload", "tampered"))
    assert cache.get(("fixed", "e3", "n5")) is None
    assert cache.fetch(("fixed", "e3", "n5"), lambda: "rebuilt") == "rebuilt"
