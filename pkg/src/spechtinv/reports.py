"""Suite runner: execute claim ledgers, compare exactly, emit reports.

Output is JSON-lines, one report per claim, then a summary object.  The
summary carries a sha256 over the report bodies with wall times stripped,
so identical seeds give an identical hash.
"""

import csv
import hashlib
import json
import time
from concurrent.futures import ThreadPoolExecutor

from .claims import PROVENANCE_PREFIXES


class VerificationReport:
    """Outcome of one claim: exact comparison of expected and computed."""

    __slots__ = ("claim_id", "expected", "provenance", "computed", "status",
                 "seed", "wall_time")

    def __init__(self, claim_id, expected, provenance, computed, status,
                 seed, wall_time):
        self.claim_id = claim_id
        self.expected = expected
        self.provenance = provenance
        self.computed = computed
        self.status = status
        self.seed = seed
        self.wall_time = wall_time

    def body(self):
        return {
            "claim_id": self.claim_id,
            "expected": {"value": self.expected,
                         "provenance": self.provenance},
            "computed": self.computed,
            "status": self.status,
            "seed": self.seed,
        }

    def to_json(self):
        payload = self.body()
        payload["wall_time"] = round(self.wall_time, 4)
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _check_provenance(claims):
    bad = [c.claim_id for c in claims
           if not isinstance(c.provenance, str)
           or not c.provenance.startswith(PROVENANCE_PREFIXES)
           or len(c.provenance.split(":", 1)[1].strip()) == 0]
    if bad:
        raise ValueError(
            "refusing to run: claims without a provenance tag: %s"
            % ", ".join(sorted(bad)))


def _run_one(claim):
    start = time.time()
    try:
        computed = claim.fn()
        status = "pass" if computed == claim.expected else "fail"
    except Exception as exc:
        computed = {"error": "%s: %s" % (type(exc).__name__, exc)}
        status = "fail"
    return VerificationReport(claim.claim_id, claim.expected,
                              claim.provenance, computed, status,
                              claim.seed, time.time() - start)


def run_suite(claims, jobs=1):
    """Run all claims; reports come back sorted by claim id."""
    _check_provenance(claims)
    ids = [c.claim_id for c in claims]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate claim ids in ledger")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, claims))
    else:
        reports = [_run_one(c) for c in claims]
    reports.sort(key=lambda r: r.claim_id)
    return reports


def summarize(reports, suite=""):
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        counts[r.status] += 1
    digest = hashlib.sha256()
    for r in reports:
        digest.update(json.dumps(r.body(), sort_keys=True,
                                 separators=(",", ":")).encode())
        digest.update(b"\n")
    return {
        "suite": suite,
        "total": len(reports),
        "passed": counts["pass"],
        "failed": counts["fail"],
        "skipped": counts["skipped"],
        "all_pass": counts["fail"] == 0,
        "body_sha256": digest.hexdigest(),
    }


def emit_jsonl(reports, fh, suite=""):
    """Write one JSON line per report plus a trailing summary line."""
    for r in reports:
        fh.write(r.to_json() + "\n")
    summary = summarize(reports, suite=suite)
    fh.write(json.dumps({"summary": summary}, sort_keys=True,
                        separators=(",", ":")) + "\n")
    return summary


def emit_csv(reports, fh):
    writer = csv.writer(fh)
    writer.writerow(["claim_id", "expected", "provenance", "computed",
                     "status", "seed", "wall_time"])
    for r in reports:
        writer.writerow([r.claim_id, json.dumps(r.expected, sort_keys=True),
                         r.provenance,
                         json.dumps(r.computed, sort_keys=True),
                         r.status, r.seed, round(r.wall_time, 4)])
