import json
import subprocess
import sys

import pytest

from trilec.catalog import UPPER_LISTS
from trilec.cli import main


@pytest.fixture
def files(tmp_path):
    g4p = tmp_path / "g4p.json"
    g4p.write_text(json.dumps(UPPER_LISTS["G4P"]))
    tri = tmp_path / "tri.txt"
    tri.write_text("n 3\n0 1\n1 2\n0 2\n")
    lists = tmp_path / "lists.txt"
    lists.write_text("0 1: 1,2\n1 2: 2,3\n0 2: 1,3\n")
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1: 1,2\n1 2: 1,2\n0 2: 1,2\n")
    return {"g4p": g4p, "tri": tri, "lists": lists, "bad": bad, "dir": tmp_path}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_atsum(capsys, files):
    code, out, _ = run(capsys, "atsum", str(files["g4p"]))
    assert code == 0
    assert out.splitlines() == ["value -288", "factorizations 416"]


def test_atsum_rejects_irregular(capsys, files):
    p = files["dir"] / "path.txt"
    p.write_text("n 3\n0 1\n1 2\n")
    code, _, err = run(capsys, "atsum", str(p))
    assert code == 2 and "error" in err


def test_missing_file(capsys, files):
    code, _, err = run(capsys, "atsum", str(files["dir"] / "nope"))
    assert code == 2 and "error" in err


def test_enum_profile(capsys, files):
    code, out, _ = run(capsys, "enum", "--n", "8", "--profile", "2,0,6", "--cache-dir", str(files["dir"]))
    assert code == 0 and out.strip() == "n 8 count 1"


def test_enum_export(capsys, files):
    code, out, _ = run(capsys, "enum", "--n", "6", "--export", "ROT", "--cache-dir", str(files["dir"]))
    lines = out.splitlines()
    assert lines[0] == "n 6 count 2" and len(lines) == 3
    assert all(json.loads(l) for l in lines[1:])


def test_enum_bad_profile(capsys, files):
    code, _, err = run(capsys, "enum", "--n", "6", "--profile", "1,2", "--cache-dir", str(files["dir"]))
    assert code == 2


def test_enum_out_of_range(capsys, files):
    code, _, _ = run(capsys, "enum", "--n", "13", "--cache-dir", str(files["dir"]))
    assert code == 2


def test_color(capsys, files):
    code, out, _ = run(capsys, "color", "--graph", str(files["tri"]), "--lists", str(files["lists"]))
    assert code == 0
    colours = [int(line.split(":")[1]) for line in out.splitlines()]
    assert len(set(colours)) == 3


def test_color_impossible(capsys, files):
    code, out, _ = run(capsys, "color", "--graph", str(files["tri"]), "--lists", str(files["bad"]))
    assert code == 1 and "no colouring" in out


def test_chromatic_index(capsys, files):
    code, out, _ = run(capsys, "chromatic-index", str(files["tri"]))
    assert (code, out.strip()) == (0, "3")


def test_choosable(capsys, files):
    assert run(capsys, "choosable", "--graph", str(files["tri"]), "--k", "2")[1].strip() == "false"
    assert run(capsys, "choosable", "--graph", str(files["tri"]), "--k", "3")[1].strip() == "true"


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "G4P")
    assert code == 0 and "8 vertices, 24 edges" in out
    code, out, _ = run(capsys, "catalog", "G4P", "--export", "UPPER")
    assert json.loads(out) == UPPER_LISTS["G4P"]


def test_catalog_rot_needs_embedding(capsys):
    code, _, err = run(capsys, "catalog", "G4P", "--export", "ROT")
    assert code == 2 and "embedding" in err


def test_verify_paper_skip_enum_cold_cache(capsys, files):
    cold = files["dir"] / "cold"
    cold.mkdir()
    out_json = files["dir"] / "r.json"
    code, out, _ = run(
        capsys, "verify-paper", "--skip-enum", "--trials", "2", "--cache-dir", str(cold), "--json", str(out_json)
    )
    recs = {r["id"]: r for r in json.loads(out_json.read_text())}
    assert all(recs[f"enum-n{n:02d}"]["status"] == "SKIP" for n in range(4, 13))
    assert recs["atsum-G4P"]["status"] == "PASS"
    assert recs["table1"]["status"] == "PASS"
    assert not any(r["status"] == "FAIL" for r in recs.values())
    assert "elapsed" not in recs["table1"]
    assert code == 0 and "overall PASS" in out


def test_console_script_entry_point(files):
    r = subprocess.run(
        [sys.executable, "-m", "trilec.cli", "atsum", str(files["g4p"])], capture_output=True, text=True
    )
    assert r.returncode == 0 and "value -288" in r.stdout
