"""The built-in catalogue, report emission, schema and offline re-verification."""
import copy
import json
import warnings
from pathlib import Path

import jsonschema
import pytest

from puretop.catalog import (
    all_pass, catalog_entries, digest, emit, report_schema, reverify, run_catalog, run_program,
    validate_report,
)
from puretop.dsl import parse

GOLDEN = Path(__file__).parent / "golden" / "catalog_subset.md"
SOURCES = {e.id: e.source for e in catalog_entries()}


@pytest.fixture(scope="module")
def records():
    return run_catalog()


def test_full_run_passes(records):
    assert records
    failing = [(r["entry"], r["index"], r["verdict"]) for r in records if not r["pass"]]
    assert not failing
    assert all_pass(records)
    assert {r["entry"] for r in records} == set(SOURCES)


def test_records_sorted_and_valid(records):
    keys = [(r["entry"], r["index"]) for r in records]
    assert keys == sorted(keys)
    validate_report(records)
    for r in records:
        assert r["digest"] == digest(r["certificate"])
        assert "wall_time" not in r


def test_every_certificate_reverifies(records):
    for r in records:
        assert reverify(r, SOURCES[r["entry"]]), (r["entry"], r["index"])


def test_tampered_evidence_rejected(records):
    splits = [r for r in records if r["evidence"] and r["evidence"]["kind"] == "retraction"]
    assert splits
    r = copy.deepcopy(splits[0])
    r["evidence"]["values"] = ["0"] * len(r["evidence"]["values"])
    assert not reverify(r, SOURCES[r["entry"]])


def test_filter_single_entry():
    recs = run_catalog(["frobtype-z4"])
    assert len(recs) == 1
    (r,) = recs
    assert r["verdict"] == "Split" and r["pass"]
    assert "witness (1) with q = 2" in r["certificate"]
    assert "J^2 = (0)" in r["certificate"]


def test_unknown_filter_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        recs = run_catalog(["no-such-entry"])
    assert recs == []
    assert any("no-such-entry" in str(w.message) for w in caught)


def test_emit_empty_and_single():
    assert emit([]) == "[]"
    recs = run_catalog(["regular-f2x"])
    one = [r for r in recs if r["check"] == "fsplit"]
    data = json.loads(emit(one))
    assert len(data) == 1 and data[0]["pass"] is True


def test_markdown_golden():
    recs = run_catalog(["frobtype-node", "frobtype-z4", "crossing-lines"])
    md = emit(recs, "markdown")
    assert md == GOLDEN.read_text(encoding="utf-8").rstrip("\n")
    assert len(md.splitlines()) == 2 + len(recs)


def test_emit_is_byte_stable(records):
    assert emit(records) == emit(json.loads(emit(records)))


def test_wall_time_only_with_timings():
    recs = run_catalog(["regular-f2x"], timings=True)
    assert all(isinstance(r["wall_time"], float) for r in recs)
    validate_report(recs)


def test_schema_rejects_unknown_fields(records):
    bad = copy.deepcopy(records[:1])
    bad[0]["extra"] = 1
    with pytest.raises(jsonschema.ValidationError):
        validate_report(bad)
    assert report_schema()["type"] == "array"


def test_entry_failures_are_isolated():
    prog = parse("""
    ring R = Q[x,y];
    ring T = Q[t];
    map f: R -> T { x -> t, y -> t^2 };
    check fsplit R expect=Split;
    check contract f ideal=(x) elem=y expect=true;
    """)
    recs = run_program("broken", prog)
    assert len(recs) == 2
    assert recs[0]["verdict"].startswith("error") and not recs[0]["pass"]
    assert recs[1]["pass"]


def test_wrong_expectation_fails():
    prog = parse(SOURCES["regular-f2x"].replace("expect=Split", "expect=NoSplit"))
    recs = run_program("regular-f2x", prog)
    assert not all_pass(recs)
