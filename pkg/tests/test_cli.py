"""The ``puretop`` command line."""
import json
import shutil
import subprocess
import sys

import pytest

from _oracles import catalog_text
from puretop.cli import main


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def test_check_passing_file(tmp_path, capsys):
    f = write(tmp_path, "z4.pt", catalog_text("frobtype-z4"))
    assert main(["check", f]) == 0
    recs = json.loads(capsys.readouterr().out)
    assert recs[0]["entry"] == "z4" and recs[0]["pass"]


def test_check_mismatch_exit_one(tmp_path, capsys):
    f = write(tmp_path, "bad.pt", catalog_text("cusp").replace("expect=NoSplit", "expect=Split"))
    assert main(["check", f]) == 1
    assert any(not r["pass"] for r in json.loads(capsys.readouterr().out))


def test_parse_error_exit_two(tmp_path, capsys):
    f = write(tmp_path, "broken.pt", "ring R = Q[x];\nring S = Q[y;\n")
    assert main(["check", f]) == 2
    err = capsys.readouterr().err
    assert err.startswith(f"{f}:2:")


def test_missing_file_and_usage(tmp_path, capsys):
    assert main(["check", str(tmp_path / "nope.pt")]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["catalog", "--format", "yaml"]) == 2


def test_catalog_list_and_filter(capsys):
    assert main(["catalog", "--list"]) == 0
    ids = capsys.readouterr().out.split()
    assert "quadric-cone" in ids and "frobtype-z4" in ids
    assert main(["catalog", "--only", "cusp,missing", "--format", "markdown"]) == 0
    out = capsys.readouterr()
    assert "missing" in out.err
    rows = [l for l in out.out.splitlines() if l.startswith("| cusp")]
    assert len(rows) == 2


def test_timings_flag(capsys):
    assert main(["catalog", "--only", "regular-f2x", "--timings"]) == 0
    recs = json.loads(capsys.readouterr().out)
    assert all("wall_time" in r for r in recs)


@pytest.mark.skipif(shutil.which("puretop") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["puretop", "catalog", "--only", "frobtype-node"], capture_output=True,
                         text=True, check=False)
    assert out.returncode == 0
    assert json.loads(out.stdout)[0]["verdict"] == "Split"


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "puretop.cli", "catalog", "--list"],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0 and "blowup" in out.stdout
