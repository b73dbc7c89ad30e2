import json
import subprocess
import sys

from h4geom import checks
from h4geom.cli import _DUMPERS, main
from h4geom.serialize import dumps, jsonable
from h4geom.golden import GoldenInt, GoldenRational
from fractions import Fraction


def test_jsonable_encodings():
    assert jsonable(GoldenInt(3, -2)) == [3, -2]
    assert jsonable(Fraction(1, 2)) == "1/2"
    assert jsonable(Fraction(4, 2)) == 2
    assert jsonable(GoldenRational(GoldenInt(1, 1), 2)) == "(1+1φ)/2"
    assert jsonable({2: {1, 3}}) == {"2": [1, 3]}


def test_verify_single_check(capsys, tmp_path):
    report = tmp_path / "r.json"
    rc = main(["verify", "--only", "facts/fact1", "--report", str(report)])
    assert rc == 0
    data = json.loads(report.read_text())
    assert len(data) == 1
    assert data[0]["check"] == "facts/fact1"
    assert data[0]["status"] == "pass"
    assert data[0]["provenance"] == "paper"


def test_verify_facts_glob_selects_ten(tmp_path):
    selected = [cid for cid in checks.CHECK_ORDER if cid.startswith("facts/")]
    assert len(selected) == 10
    report = tmp_path / "r.json"
    rc = main(["verify", "--only", "facts/fact[12]*", "--report", str(report)])
    assert rc == 0
    data = json.loads(report.read_text())
    assert {d["check"] for d in data} == {"facts/fact1", "facts/fact2", "facts/fact10"}


def test_verify_unknown_selector_is_usage_error(capsys):
    assert main(["verify", "--only", "nonexistent"]) == 2


def test_dump_unknown_object_is_usage_error():
    assert main(["dump", "wat"]) == 2


def test_failed_check_gives_exit_1_and_writes_report(tmp_path, monkeypatch):
    bad = dict(checks.CHECKS)
    prov, _, fn = bad["facts/fact1"]
    bad["facts/fact1"] = (prov, {"vertices": 121}, fn)
    monkeypatch.setattr(checks, "CHECKS", bad)
    report = tmp_path / "r.json"
    rc = main(["verify", "--only", "facts/fact1", "--report", str(report)])
    assert rc == 1
    data = json.loads(report.read_text())
    assert data[0]["status"] == "fail"


def test_dump_outputs_are_deterministic(tmp_path):
    for obj in ("vertices", "labels", "array"):
        a = dumps(_DUMPERS[obj]())
        b = dumps(_DUMPERS[obj]())
        assert a == b


def test_dump_matches_fresh_process(tmp_path):
    """Cross-process determinism: a fresh interpreter produces identical bytes."""
    inproc = dumps(_DUMPERS["array"]())
    out = subprocess.run(
        [sys.executable, "-m", "h4geom.cli", "dump", "array"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout == inproc


def test_dump_labels_contains_unit_label():
    data = json.loads(dumps(_DUMPERS["labels"]()))
    labels = {entry["label"] for entry in data["pairs"]}
    assert "(16)(27)(38)(49)(5X)" in labels
    assert len(data["pairs"]) == 60


def test_dump_lines_has_357_typed_entries():
    data = json.loads(dumps(_DUMPERS["lines"]()))
    assert data["count"] == 357
    types = {}
    for entry in data["lines"]:
        types[entry["type"]] = types.get(entry["type"], 0) + 1
    assert types == {"partition": 10, "pentagon": 72, "cell16": 75, "triangle": 200}


def test_threaded_verify_matches_serial(tmp_path):
    r1 = tmp_path / "t1.json"
    r2 = tmp_path / "t2.json"
    assert main(["verify", "--only", "facts/fact[157]", "--report", str(r1)]) == 0
    assert main(
        ["verify", "--only", "facts/fact[157]", "--report", str(r2), "--threads", "3"]
    ) == 0
    a = json.loads(r1.read_text())
    b = json.loads(r2.read_text())
    for entry in a + b:
        entry.pop("elapsed_ms")
    assert a == b
