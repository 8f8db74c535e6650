import csv
import io
import json

import pytest

from spechtinv.claims import Claim
from spechtinv.reports import (
    VerificationReport,
    emit_csv,
    emit_jsonl,
    run_suite,
    summarize,
)


def _claims():
    return [
        Claim("b:second", 4, "DERIVED: arithmetic", lambda: 2 + 2),
        Claim("a:first", 3, "PAPER:Lemma 0.0", lambda: 3),
    ]


def test_run_suite_sorts_and_passes():
    reports = run_suite(_claims())
    assert [r.claim_id for r in reports] == ["a:first", "b:second"]
    assert all(r.status == "pass" for r in reports)
    summary = summarize(reports, suite="unit")
    assert summary["suite"] == "unit"
    assert summary["total"] == 2
    assert summary["passed"] == 2
    assert summary["all_pass"] is True


def test_refuses_untagged_claims():
    bad = [Claim("x", 1, "guessing", lambda: 1)]
    with pytest.raises(ValueError, match="refusing to run"):
        run_suite(bad)
    empty_tag = [Claim("x", 1, "PAPER: ", lambda: 1)]
    with pytest.raises(ValueError, match="refusing to run"):
        run_suite(empty_tag)


def test_refuses_duplicate_ids():
    claims = [Claim("dup", 1, "PAPER:L", lambda: 1),
              Claim("dup", 2, "PAPER:L", lambda: 2)]
    with pytest.raises(ValueError, match="duplicate"):
        run_suite(claims)


def test_failure_and_exception_reporting():
    claims = [
        Claim("ok", 1, "PAPER:L", lambda: 1),
        Claim("wrong", 1, "PAPER:L", lambda: 2),
        Claim("boom", 1, "PAPER:L", lambda: 1 // 0),
    ]
    reports = run_suite(claims)
    by_id = {r.claim_id: r for r in reports}
    assert by_id["ok"].status == "pass"
    assert by_id["wrong"].status == "fail"
    assert by_id["wrong"].computed == 2
    assert by_id["boom"].status == "fail"
    assert "ZeroDivisionError" in by_id["boom"].computed["error"]
    summary = summarize(reports)
    assert summary["failed"] == 2
    assert summary["all_pass"] is False


def test_body_hash_ignores_wall_time():
    r1 = VerificationReport("c", 1, "PAPER:L", 1, "pass", 0, 0.1)
    r2 = VerificationReport("c", 1, "PAPER:L", 1, "pass", 0, 9.9)
    assert summarize([r1])["body_sha256"] == summarize([r2])["body_sha256"]
    # but the emitted line carries it
    line = json.loads(r1.to_json())
    assert line["wall_time"] == 0.1
    assert line["expected"] == {"value": 1, "provenance": "PAPER:L"}


def test_jobs_do_not_change_the_hash():
    h1 = summarize(run_suite(_claims(), jobs=1))["body_sha256"]
    h2 = summarize(run_suite(_claims(), jobs=3))["body_sha256"]
    assert h1 == h2


def test_emit_jsonl_and_csv():
    reports = run_suite(_claims())
    buf = io.StringIO()
    summary = emit_jsonl(reports, buf, suite="unit")
    lines = buf.getvalue().splitlines()
    assert len(lines) == 3
    assert json.loads(lines[0])["claim_id"] == "a:first"
    assert json.loads(lines[-1]) == {"summary": summary}
    cbuf = io.StringIO()
    emit_csv(reports, cbuf)
    rows = list(csv.reader(io.StringIO(cbuf.getvalue())))
    assert rows[0] == ["claim_id", "expected", "provenance", "computed",
                       "status", "seed", "wall_time"]
    assert rows[1][0] == "a:first"
    assert rows[1][4] == "pass"
