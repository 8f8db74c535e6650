"""Dimension calculus for F_p of Specht modules.

Closed formulas for the covered families, exact branching recursion when
the removable-node residues are distinct, char-0 lower bounds, interval
upper bounds, and brute force on the standard basis as the fallback.
"""

import csv
import io
import json
import os
import tempfile

from .partitions import (char0_dim, degree, format_partition,
                         removable_nodes, remove_node, validate_partition)
from .tableaux import SkewShape, branching_splits, lr_sections
from .modules import specht_fixed_space

BRUTE_CAP = 5000

_memo = {}
_disk_loaded = False


class CapExceeded(ValueError):
    """Brute force was requested on a module above the dimension cap."""


class InvariantResult:
    """One computed invariant dimension, exact or an interval."""

    __slots__ = ("p", "lam", "m", "value", "method", "citation")

    def __init__(self, p, lam, m, value, method, citation):
        self.p = p
        self.lam = lam
        self.m = m
        self.value = value
        self.method = method
        self.citation = citation
        if method in ("branching_bound", "char0_bound"):
            lo, hi = value
            if lo > hi:
                raise ValueError("empty interval [%d, %d]" % (lo, hi))
        elif not isinstance(value, int):
            raise ValueError("point value expected for method %s" % method)

    @property
    def exact(self):
        return isinstance(self.value, int)

    @property
    def upper(self):
        return self.value if self.exact else self.value[1]

    @property
    def lower(self):
        return self.value if self.exact else self.value[0]

    def value_str(self):
        if self.exact:
            return str(self.value)
        return "[%d,%d]" % self.value

    def __repr__(self):
        return "InvariantResult(F_%d(%s), m=%d, value=%s, %s, %s)" % (
            self.p, format_partition(self.lam), self.m, self.value_str(),
            self.method, self.citation)


def _pm1_family(lam, p):
    """lam is (p-1)^l followed by at most one smaller part, l >= 1."""
    body = [q for q in lam if q == p - 1]
    tail = [q for q in lam if q != p - 1]
    if len(body) < 1 or len(tail) > 1:
        return False
    if tail and not tail[0] < p - 1:
        return False
    return tuple(body) + tuple(tail) == lam


def closed_formula(lam, p):
    """Exact F_p(lam) from the covered formula families, else None."""
    lam = validate_partition(lam)
    r = degree(lam)
    if r < p:
        return None

    def hit(value, citation):
        return InvariantResult(p, lam, p, int(value), "closed_formula",
                               citation)

    if lam and lam[0] <= p - 1:
        return hit(1 if _pm1_family(lam, p) else 0, "Lemma 2.1")
    if lam == (p,):
        return hit(1, "Lemma 2.2")
    if r == p:
        # degree-p grounds: only (p) and (p-1,1) have invariants
        return hit(1 if lam == (p - 1, 1) else 0, "Lemma 1.4.1")

    if p == 2:
        table = {(2, 1): 1, (2, 2): 1, (3, 1): 2, (3, 2): 3, (3, 3): 3,
                 (4, 1): 3, (4, 2): 6, (4, 3): 9, (4, 4): 9}
        cites = {(2, 1): "Lemma 5.2", (2, 2): "Lemma 5.2",
                 (3, 1): "Lemma 5.3", (3, 2): "Lemma 5.3",
                 (3, 3): "Lemma 5.3", (4, 1): "Lemma 5.4",
                 (4, 2): "Lemma 5.4", (4, 3): "Lemma 5.4",
                 (4, 4): "Lemma 5.4"}
        if lam in table:
            return hit(table[lam], cites[lam])
        return None

    if p == 3:
        if len(lam) == 2 and lam[0] == 3:
            a = lam[1]
            return hit(2 if a == 3 else a, "Lemma 4.1")
        if len(lam) == 3 and lam[0] == 3 and lam[2] != 3:
            a, b = lam[1], lam[2]
            if a == 1:
                return hit(1, "Lemma 4.2")
            if a == 2:
                return hit(b + 3, "Lemma 4.2")
            return hit(5 * b + 1, "Lemma 4.2")
        if lam == (3, 3, 3):
            return hit(11, "Lemma 4.3")
        if len(lam) <= 2 and lam[0] == 4:
            a = lam[1] if len(lam) == 2 else 0
            return hit(5 if a == 3 else a + 1, "Lemma 4.4")
        if lam == (4, 1, 1):
            return hit(3, "Lemma 4.5")
        if lam in ((4, 4, 3), (4, 4, 4)):
            return hit(126, "Lemma 4.6")
        return None

    # p >= 5, first part exactly p, at most three parts
    if lam[0] != p or len(lam) > 3:
        return None
    if len(lam) == 2:
        a = lam[1]
        return hit(p - 1 if a == p else a, "Lemma 2.3")
    a, b = lam[1], lam[2]
    if b == 1:
        if a == p:
            return hit(p * (p + 1) // 2, "Lemma 2.4")
        if a == p - 1:
            return hit(p * (p - 1) // 2 + 1, "Lemma 2.4")
        return hit(a * (a + 1) // 2, "Lemma 2.4")
    if a == p and b == p:
        return hit(char0_dim((p, p - 1)) + char0_dim((2 * p - 3, 1, 1)),
                   "Lemma 2.14")
    if a == p:
        return hit(char0_dim((p, b)) + char0_dim((p + b - 2, 1, 1)),
                   "Lemma 2.13")
    if a == p - 1:
        return hit(char0_dim((p - 1, b)) + char0_dim((p + b - 2, 1)),
                   "Lemma 2.13")
    return hit(char0_dim((a, b)), "Lemma 2.13")


def char0_invariant_dim(lam, m):
    """Trivial-isotypic dimension of the rational Specht module under
    the subgroup permuting the first m letters, by Littlewood-Richardson
    sections of lam/(m)."""
    lam = validate_partition(lam)
    if not 0 < m < degree(lam):
        raise ValueError("need 0 < m < degree")
    if not lam or lam[0] < m:
        return 0
    return sum(mult * char0_dim(nu)
               for nu, mult in lr_sections(SkewShape(lam, (m,))))


def brute_force(lam, p, m, cap=BRUTE_CAP):
    """Point value by the fixed-space computation on the standard basis."""
    lam = validate_partition(lam)
    d = char0_dim(lam)
    if d > cap:
        raise CapExceeded("dim Sp(%s) = %d exceeds the brute-force cap %d"
                          % (format_partition(lam), d, cap))
    value, _ = specht_fixed_space(lam, p, m)
    return InvariantResult(p, lam, m, value, "brute_force",
                           "direct computation")


def branching_bound(lam, p, cap=BRUTE_CAP):
    """Branching recursion: exact sum over one-node removals when the
    removable residues are distinct and every child value is exact,
    else an interval bound."""
    lam = validate_partition(lam)
    if degree(lam) <= p:
        raise ValueError("branching recursion needs degree above p")
    children = [evaluate(remove_node(lam, node), p, cap=cap)
                for node in removable_nodes(lam)]
    upper = sum(c.upper for c in children)
    if branching_splits(lam, p) and all(c.exact for c in children):
        return InvariantResult(p, lam, p, upper, "branching_exact",
                               "Cor 1.3.6")
    lower = char0_invariant_dim(lam, p)
    return InvariantResult(p, lam, p, (lower, upper), "branching_bound",
                           "Cor 1.3.6")


def char0_bound(lam, p, m):
    """Characteristic-zero invariant count as a standalone interval."""
    value = char0_invariant_dim(lam, m)
    return InvariantResult(p, lam, m, (value, char0_dim(lam)),
                           "char0_bound", "Remark 1.3.7")


def evaluate(lam, p, m=None, strategy="auto", cap=BRUTE_CAP, verify=False):
    """Best available value of F_m(Sp(lam)) over GF(p).

    Tries closed formulas first, then the exact branching recursion, then
    brute force under the dimension cap; oversized inputs degrade to an
    interval.  verify=True cross-checks any formula value against brute
    force when the module fits the cap.
    """
    lam = validate_partition(lam)
    if m is None:
        m = p
    if not 1 <= m <= degree(lam):
        raise ValueError("need 1 <= m <= degree(lam)")
    key = (p, lam, m)
    if strategy == "auto" and not verify:
        cached = _memo_get(key)
        # an interval stored by a forced strategy must not pin auto mode
        if cached is not None and cached.exact:
            return cached

    result = None
    if strategy in ("auto", "closed_formula") and m == p:
        result = closed_formula(lam, p)
        if result is None and strategy == "closed_formula":
            raise ValueError("no closed formula covers F_%d%s"
                             % (p, format_partition(lam)))
    if result is None and strategy in ("auto", "branching") and m == p \
            and degree(lam) > p:
        if strategy == "branching":
            result = branching_bound(lam, p, cap=cap)
        elif branching_splits(lam, p):
            candidate = branching_bound(lam, p, cap=cap)
            if candidate.exact:
                result = candidate
    if result is None and strategy in ("auto", "brute_force"):
        if char0_dim(lam) <= cap:
            result = brute_force(lam, p, m, cap=cap)
        elif strategy == "brute_force":
            raise CapExceeded("dim Sp(%s) = %d exceeds the brute-force cap %d"
                              % (format_partition(lam), char0_dim(lam), cap))
    if result is None and strategy == "auto" and m == p \
            and degree(lam) > p:
        result = branching_bound(lam, p, cap=cap)
    if result is None:
        if char0_dim(lam) > cap:
            raise CapExceeded(
                "dim Sp(%s) = %d exceeds the brute-force cap %d and no "
                "other method applies for m=%d"
                % (format_partition(lam), char0_dim(lam), cap, m))
        raise ValueError("no applicable method for F_%d(%s) with m=%d"
                         % (p, format_partition(lam), m))

    if verify and result.exact and result.method != "brute_force" \
            and char0_dim(lam) <= cap:
        check = brute_force(lam, p, m, cap=cap)
        if check.value != result.value:
            raise AssertionError(
                "%s gives %s but brute force gives %d for F_%d%s"
                % (result.method, result.value_str(), check.value, p,
                   format_partition(lam)))
    _memo_put(key, result)
    return result


def results_csv(results):
    """CSV table: p, lambda, m, value_or_interval, method, citation."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["p", "lambda", "m", "value_or_interval", "method",
                     "citation"])
    for res in results:
        writer.writerow([res.p, format_partition(res.lam), res.m,
                         res.value_str(), res.method, res.citation])
    return buf.getvalue()


def _cache_path():
    root = os.environ.get("SPECHTINV_CACHE")
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    return os.path.join(root, "invariants.json")


def _memo_get(key):
    global _disk_loaded
    if not _disk_loaded:
        _disk_loaded = True
        path = _cache_path()
        if path and os.path.exists(path):
            with open(path) as fh:
                for entry in json.load(fh):
                    lam = tuple(entry["lambda"])
                    value = entry["value"]
                    if isinstance(value, list):
                        value = tuple(value)
                    res = InvariantResult(entry["p"], lam, entry["m"],
                                          value, entry["method"],
                                          entry["citation"])
                    _memo[(res.p, lam, res.m)] = res
    return _memo.get(key)


def _memo_put(key, result):
    fresh = key not in _memo
    _memo[key] = result
    path = _cache_path()
    if fresh and path:
        entries = [{"p": r.p, "lambda": list(r.lam), "m": r.m,
                    "value": list(r.value) if not r.exact else r.value,
                    "method": r.method, "citation": r.citation}
                   for r in _memo.values()]
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path))
        with os.fdopen(fd, "w") as fh:
            json.dump(entries, fh)
        os.replace(tmp, path)


def clear_memo():
    _memo.clear()
