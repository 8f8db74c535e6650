"""Pure numpy kernels for exact row reduction over GF(p).

Fallback lane.  The compiled lane in _gfcore.pyx implements the same entry
points with identical output contracts; gfp.py selects a lane at import time.
"""

import numpy as np


def lane_name():
    return "python"


def inverse_table(p):
    """Array inv with inv[a] = a^(-1) mod p for 1 <= a < p (inv[0] = 0)."""
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def rref_small(a, p):
    """Reduce a to reduced row echelon form in place, returning pivot columns.

    a: int64 C-contiguous 2-D array with entries in [0, p).  Pivot search is
    first nonzero scanning top to bottom, left to right.
    """
    m, n = a.shape
    inv = inverse_table(p)
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        if a[r, c] != 1:
            a[r, c:] = a[r, c:] * inv[a[r, c]] % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            a[rows, c:] = (a[rows, c:] - np.outer(col[rows], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots


def panel_forward(S, p):
    """Forward-eliminate a column panel in place.

    S: int64 h x bw array of residues.  Pivot rows are swapped to the top in
    pivot order and normalized; entries below each pivot are cleared within
    the panel.  Returns (pivcols, perm, alphas, M):
      pivcols: local pivot column indices, strictly increasing
      perm: applied row permutation, new row i held old row perm[i]
      alphas[t]: scalar that normalized pivot row t
      M[i, t]: multiplier clearing row i against pivot row t (final row
               order; M[i, t] = 0 for i <= t)
    """
    h, bw = S.shape
    inv = inverse_table(p)
    perm = np.arange(h, dtype=np.int64)
    M = np.zeros((h, min(h, bw)), dtype=np.int64)
    pivcols = []
    alphas = []
    t = 0
    for c in range(bw):
        if t == h:
            break
        nz = np.nonzero(S[t:, c])[0]
        if nz.size == 0:
            continue
        i = t + int(nz[0])
        if i != t:
            S[[t, i]] = S[[i, t]]
            M[[t, i]] = M[[i, t]]
            perm[[t, i]] = perm[[i, t]]
        alpha = int(inv[S[t, c]])
        if alpha != 1:
            S[t, c:] = S[t, c:] * alpha % p
        mult = S[t + 1:, c].copy()
        rows = np.nonzero(mult)[0]
        if rows.size:
            S[t + 1 + rows, c:] = (S[t + 1 + rows, c:]
                                   - np.outer(mult[rows], S[t, c:])) % p
        M[t + 1:, t] = mult
        pivcols.append(c)
        alphas.append(alpha)
        t += 1
    return (np.array(pivcols, dtype=np.int64), perm,
            np.array(alphas, dtype=np.int64), np.ascontiguousarray(M[:, :t]))
