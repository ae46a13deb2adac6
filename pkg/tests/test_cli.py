import io
import json
import shutil
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from heckecells.cli import run, run_golden

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(list(argv))
    return code, buf.getvalue()


def test_examples():
    code, out = call("kl", "--y", "2", "--w", "2323")
    assert code == 0 and json.loads(out) == {"poly": [[0, 1]]}
    code, out = call("gamma", "--x", "10", "--y", "10", "--z", "10")
    assert code == 0 and json.loads(out) == {"gamma": 1}
    code, out = call("verify", "lemma3.5", "--kmax", "2", "--lmax", "2")
    rep = json.loads(out)
    assert code == 0 and rep["pass"] is True and rep["instances"] == 9


def test_usage_errors():
    code, out = call("kl", "--y", "2", "--w", "2x3")
    assert code == 2 and "error" in json.loads(out)
    code, out = call("frobnicate")
    assert code == 2
    code, out = call("gamma", "--x", "2", "--y", "2", "--z", "2")
    assert code == 2 and "a-value" in json.loads(out)["error"]
    code, out = call("kl", "--y", "2", "--w", "2323", "--bogus")
    assert code == 2


def test_budget_guard():
    code, out = call("verify", "lemma3.5", "--kmax", "5", "--lmax", "5", "--budget", "10")
    assert code == 2 and "budget" in json.loads(out)["error"]


def test_determinism_and_thread_independence():
    argv = ["verify", "thm4.2", "--kmax", "1", "--sample", "8", "--seed", "3"]
    _, one = call(*argv, "--threads", "1")
    _, again = call(*argv, "--threads", "1")
    _, many = call(*argv, "--threads", "4")
    assert one == again == many
    argv = ["verify", "lemmaspade", "--kmax", "1", "--lmax", "1"]
    assert call(*argv, "--threads", "1")[1] == call(*argv, "--threads", "3")[1]


def test_cache_file_written(tmp_path, monkeypatch):
    from heckecells import klbase

    monkeypatch.setattr(klbase, "_default", None)
    path = tmp_path / "cache.json"
    code, _ = call("kl", "--y", "0", "--w", "0120", "--cache", str(path))
    assert code == 0
    assert "0|0120" in json.loads(path.read_text())
    monkeypatch.setattr(klbase, "_default", None)


def test_golden_suite():
    rep = run_golden(str(GOLDEN))
    assert rep["pass"], rep["failures"]
    assert rep["cases"] > 0


def test_golden_tampered(tmp_path):
    shutil.copy(GOLDEN / "kl_dihedral.json", tmp_path)
    case = json.loads((tmp_path / "kl_dihedral.json").read_text())
    case["expected"]["poly"] = [[0, 2]]
    (tmp_path / "kl_dihedral.json").write_text(json.dumps(case))
    rep = run_golden(str(tmp_path))
    assert not rep["pass"]
    assert rep["failures"][0]["diff"]


def test_golden_empty(tmp_path):
    assert run_golden(str(tmp_path)) == {"pass": True, "cases": 0, "failures": []}
