"""Exact dense linear algebra over GF(p).

Echelon forms, ranks, kernels, solving, row space intersection, and the
matrix dump format.  Two interchangeable kernel lanes sit underneath: a
compiled extension (_gfcore) and a pure numpy fallback (_gfcore_py).  The
compiled lane is preferred when importable; setting SPECHTINV_PURE=1 forces
the fallback.  Both lanes produce bit-identical results (the reduced row
echelon form is canonical).

Large eliminations run through a blocked panel driver whose trailing updates
are float64 BLAS products.  With k <= 128 panel columns and p < 2^16 every
intermediate value stays below 128 * p^2 < 2^53, so the float arithmetic is
exact.
"""

import os

import numpy as np
from sympy import isprime

if os.environ.get("SPECHTINV_PURE"):
    from . import _gfcore_py as _core
else:
    try:
        from . import _gfcore as _core
    except ImportError:
        from . import _gfcore_py as _core

LANE = _core.lane_name()
COMPILED = LANE == "compiled"

_BLOCK = 128
_SMALL = 256
_checked_primes = set()


def _check_prime(p):
    if p in _checked_primes:
        return
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise ValueError("modulus must be a prime, got %r" % (p,))
    if p >= 2 ** 16:
        raise ValueError("modulus %d too large (need p < 2^16)" % p)
    _checked_primes.add(p)


def as_residues(a, p):
    """Copy a into a C-contiguous int64 array of residues in [0, p)."""
    _check_prime(p)
    out = np.array(a, dtype=np.int64, order="C")
    if out.ndim not in (1, 2):
        raise ValueError("expected a vector or a matrix")
    np.remainder(out, p, out=out)
    return out


def rref(a, p):
    """Reduced row echelon form of a over GF(p).

    Returns (R, pivots) where R has the same shape as a and pivots is the
    tuple of pivot column indices.  R is canonical, so identical inputs give
    bit-identical outputs on either kernel lane.
    """
    r = as_residues(a, p)
    if r.ndim != 2:
        raise ValueError("rref needs a matrix")
    m, n = r.shape
    if m == 0 or n == 0:
        return r, ()
    if min(m, n) <= _SMALL:
        piv = _core.rref_small(r, p)
        return r, tuple(int(c) for c in piv)
    return _rref_blocked(r, p)


def _rref_blocked(a, p):
    """Blocked elimination for large matrices, float64 GEMM updates."""
    m, n = a.shape
    f = a.astype(np.float64)
    pivs = []
    r = 0
    j0 = 0
    while j0 < n and r < m:
        j1 = min(j0 + _BLOCK, n)
        panel = np.ascontiguousarray(f[r:, j0:j1]).astype(np.int64)
        pivc, perm, alphas, mults = _core.panel_forward(panel, p)
        k = len(pivc)
        f[r:, j0:j1] = panel
        if k and j1 < n:
            t = f[r:, j1:][perm]
            mf = mults.astype(np.float64)
            av = alphas.astype(np.float64)
            sb = 32
            for t0 in range(0, k, sb):
                t1 = min(t0 + sb, k)
                for i in range(t0, t1):
                    if i > t0:
                        t[i] -= mf[i, t0:i] @ t[t0:i]
                    t[i] = av[i] * t[i] % p
                if t1 < k:
                    t[t1:k] -= mf[t1:k, t0:t1] @ t[t0:t1]
            if k < t.shape[0]:
                t[k:] = (t[k:] - mf[k:] @ t[:k]) % p
            f[r:, j1:] = t
        pivs.extend(int(j0 + c) for c in pivc)
        r += k
        j0 = j1
    # clear above pivots, bottom block first so later pivot columns are
    # already zero when an earlier block is processed
    for t1 in range(r, 0, -_BLOCK):
        t0 = max(0, t1 - _BLOCK)
        for t in range(t1 - 1, t0, -1):
            c = pivs[t]
            coef = f[t0:t, c].copy()
            if coef.any():
                f[t0:t, c:] = (f[t0:t, c:] - np.outer(coef, f[t, c:])) % p
        if t0 > 0:
            cols = np.array(pivs[t0:t1])
            cstart = pivs[t0]
            coefs = f[:t0, cols]
            if coefs.any():
                f[:t0, cstart:] = (f[:t0, cstart:]
                                   - coefs @ f[t0:t1, cstart:]) % p
    out = f.astype(np.int64)
    return out, tuple(pivs)


def rank(a, p):
    return len(rref(a, p)[1])


def row_basis(a, p):
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    r, piv = rref(a, p)
    return r[:len(piv)]


def kernel_basis(a, p):
    """Rows spanning the right null space: a @ v = 0 mod p for each row v."""
    r, piv = rref(a, p)
    n = r.shape[1]
    pivset = set(piv)
    free = [c for c in range(n) if c not in pivset]
    k = np.zeros((len(free), n), dtype=np.int64)
    if free:
        k[np.arange(len(free)), free] = 1
        if piv:
            k[:, list(piv)] = (-r[:len(piv), free].T) % p
    return k


def solve(a, b, p):
    """Some solution x of a @ x = b mod p, or None when inconsistent.

    b may be a vector or a matrix of stacked right-hand sides.
    """
    a2 = as_residues(a, p)
    b2 = as_residues(b, p)
    vec = b2.ndim == 1
    rhs = b2[:, None] if vec else b2
    if rhs.shape[0] != a2.shape[0]:
        raise ValueError("shape mismatch in solve")
    n = a2.shape[1]
    r, piv = rref(np.concatenate([a2, rhs], axis=1), p)
    if any(c >= n for c in piv):
        return None
    x = np.zeros((n, rhs.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = r[i, n:]
    return x[:, 0] if vec else x


def matmul_mod(a, b, p):
    """Exact a @ b mod p via float64 BLAS, chunking the inner dimension."""
    a2 = as_residues(a, p)
    b2 = as_residues(b, p)
    af = a2.astype(np.float64)
    bf = b2.astype(np.float64)
    inner = af.shape[-1]
    chunk = max(1, int(2 ** 53 // max(1, (p - 1) ** 2)))
    if inner <= chunk:
        prod = af @ bf
        return np.remainder(prod, p).astype(np.int64)
    acc = None
    for s in range(0, inner, chunk):
        part = np.remainder(af[..., s:s + chunk] @ bf[s:s + chunk], p)
        acc = part if acc is None else np.remainder(acc + part, p)
    return acc.astype(np.int64)


def intersect_rowspaces(a, b, p):
    """Canonical basis of rowspace(a) intersected with rowspace(b)."""
    a2 = as_residues(a, p)
    b2 = as_residues(b, p)
    if a2.shape[1] != b2.shape[1]:
        raise ValueError("column counts differ")
    n = a2.shape[1]
    ra = row_basis(a2, p)
    rb = row_basis(b2, p)
    if ra.shape[0] == 0 or rb.shape[0] == 0:
        return np.zeros((0, n), dtype=np.int64)
    stacked = np.concatenate([ra, rb])
    left = kernel_basis(stacked.T, p)
    if left.shape[0] == 0:
        return np.zeros((0, n), dtype=np.int64)
    vecs = matmul_mod(left[:, :ra.shape[0]], ra, p)
    return row_basis(vecs, p)


def solve_unit_lower(l, b, p):
    """Solve l @ x = b mod p with l unit lower triangular, blocked."""
    l2 = as_residues(l, p)
    b2 = as_residues(b, p)
    vec = b2.ndim == 1
    rhs = (b2[:, None] if vec else b2).astype(np.float64)
    lf = l2.astype(np.float64)
    n = l2.shape[0]
    if rhs.shape[0] != n:
        raise ValueError("shape mismatch in solve_unit_lower")
    # inner dims stay under 2^21 rows only if n does; chunk via matmul bound
    assert n * (p - 1) ** 2 < 2 ** 53
    x = np.zeros_like(rhs)
    for t0 in range(0, n, _BLOCK):
        t1 = min(t0 + _BLOCK, n)
        block = rhs[t0:t1]
        if t0:
            block = block - lf[t0:t1, :t0] @ x[:t0]
        for i in range(t0, t1):
            row = block[i - t0]
            if i > t0:
                row = row - lf[i, t0:i] @ x[t0:i]
            x[i] = np.remainder(row, p)
    out = x.astype(np.int64)
    return out[:, 0] if vec else out


def solve_unit_upper(u, b, p):
    """Solve u @ x = b mod p with u unit upper triangular."""
    u2 = as_residues(u, p)
    b2 = as_residues(b, p)
    vec = b2.ndim == 1
    rhs = b2[:, None] if vec else b2
    rev = slice(None, None, -1)
    x = solve_unit_lower(u2[rev, rev], rhs[rev], p)
    x = x[rev]
    return x[:, 0] if vec else x


class GFMatrix:
    """Dense matrix of residues mod a prime; carrier for the dump format."""

    __slots__ = ("p", "a")

    def __init__(self, a, p):
        self.a = as_residues(a, p)
        if self.a.ndim != 2:
            raise ValueError("GFMatrix needs a 2-D array")
        self.p = p

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    def dump(self):
        """Serialize as 'p rows cols' then row-major entries."""
        lines = ["%d %d %d" % (self.p, self.rows, self.cols)]
        for row in self.a:
            lines.append(" ".join(str(int(v)) for v in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text):
        toks = text.split()
        if len(toks) < 3:
            raise ValueError("truncated matrix dump")
        p, rows, cols = (int(t) for t in toks[:3])
        vals = [int(t) for t in toks[3:]]
        if len(vals) != rows * cols:
            raise ValueError("matrix dump entry count mismatch")
        arr = np.array(vals, dtype=np.int64).reshape(rows, cols)
        return cls(arr, p)

    def __eq__(self, other):
        return (isinstance(other, GFMatrix) and self.p == other.p
                and self.a.shape == other.a.shape
                and bool(np.array_equal(self.a, other.a)))

    def __repr__(self):
        return "GFMatrix(%dx%d mod %d)" % (self.rows, self.cols, self.p)
