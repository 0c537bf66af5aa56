import csv
import io
import json

from pi3lab.congruences import CheckResult, run_range
from pi3lab.report import (
    CSV_COLUMNS,
    exit_code,
    render_csv,
    render_json,
    render_table,
    summarize,
)


def _sample_results():
    return run_range(["C-1.6", "C-1.14"], [3, 5, 7])


def test_json_schema():
    doc = json.loads(render_json(_sample_results(), {"command": "verify"}, timestamp=False))
    assert set(doc) == {"run", "results", "summary"}
    assert doc["run"]["command"] == "verify"
    assert "timestamp" not in doc["run"]
    row = doc["results"][0]
    assert list(row) == CSV_COLUMNS
    assert isinstance(row["lhs_residue"], str)
    assert isinstance(row["modulus"], str)
    assert row["pass"] in (True, False, None)
    s = doc["summary"]
    assert s["pass"] + s["fail"] + s["skip"] == len(doc["results"])
    assert "theorem" in s["by_status"]


def test_json_deterministic_without_timestamp():
    a = render_json(_sample_results(), {"command": "verify"}, timestamp=False)
    b = render_json(_sample_results(), {"command": "verify"}, timestamp=False)
    # elapsed differs between runs; strip it before comparing
    da, db = json.loads(a), json.loads(b)
    for doc in (da, db):
        for row in doc["results"]:
            row.pop("elapsed_ms")
    assert da == db


def test_json_timestamp_present_by_default():
    doc = json.loads(render_json(_sample_results(), {}))
    assert "timestamp" in doc["run"]


def test_csv_round_trip():
    text = render_csv(_sample_results())
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows
    assert list(rows[0]) == CSV_COLUMNS
    skip_row = next(r for r in rows if r["prime"] == "3")
    assert skip_row["pass"] == ""
    pass_row = next(r for r in rows if r["check_id"] == "C-1.14" and r["prime"] == "5")
    assert pass_row["pass"] == "true"
    assert pass_row["modulus"] == "625"
    assert pass_row["lhs_residue"] == "415"


def test_table_renders_summary_line():
    text = render_table(_sample_results())
    assert "pass=" in text and "skip=" in text
    assert "C-1.14" in text


def test_summarize_counts():
    s = summarize(_sample_results())
    assert s["skip"] == 2  # both checks need p > 3
    assert s["fail"] == 0


def _fake(check_id, status, passed):
    return CheckResult(check_id, 7, 1, status, "exact", passed)


def test_exit_code_policy():
    assert exit_code([_fake("a", "theorem", True)]) == 0
    assert exit_code([_fake("a", "conjecture", False), _fake("b", "theorem", True)]) == 2
    assert exit_code([_fake("a", "conjecture", False), _fake("b", "cited", False)]) == 1
    assert exit_code([_fake("a", "basic", False)]) == 1
    assert exit_code([_fake("a", "theorem", None)]) == 0
