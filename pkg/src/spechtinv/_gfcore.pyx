# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for exact row reduction over GF(p).

Drop-in replacement for _gfcore_py with identical output contracts.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def lane_name():
    return "compiled"


def inverse_table(p):
    """Array inv with inv[a] = a^(-1) mod p for 1 <= a < p (inv[0] = 0)."""
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def rref_small(cnp.int64_t[:, ::1] a, long p):
    """Reduce a to reduced row echelon form in place, returning pivot columns.

    Same contract as _gfcore_py.rref_small.
    """
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef cnp.int64_t[::1] inv = inverse_table(p)
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef cnp.int64_t alpha, mult, tmp
    cdef long pp = p * p
    pivots = []
    for c in range(n):
        if r == m:
            break
        i = -1
        for k in range(r, m):
            if a[k, c] != 0:
                i = k
                break
        if i < 0:
            continue
        if i != r:
            for j in range(n):
                tmp = a[r, j]
                a[r, j] = a[i, j]
                a[i, j] = tmp
        alpha = inv[a[r, c]]
        if alpha != 1:
            for j in range(c, n):
                a[r, j] = a[r, j] * alpha % p
        for k in range(m):
            if k == r:
                continue
            mult = a[k, c]
            if mult == 0:
                continue
            for j in range(c, n):
                # operands below p so the shift keeps the argument nonnegative
                a[k, j] = (a[k, j] - mult * a[r, j] + pp) % p
        pivots.append(c)
        r += 1
    return pivots


def panel_forward(cnp.int64_t[:, ::1] S, long p):
    """Forward-eliminate a column panel in place.

    Same contract as _gfcore_py.panel_forward.
    """
    cdef Py_ssize_t h = S.shape[0]
    cdef Py_ssize_t bw = S.shape[1]
    cdef cnp.int64_t[::1] inv = inverse_table(p)
    cdef Py_ssize_t kmax = h if h < bw else bw
    perm_arr = np.arange(h, dtype=np.int64)
    M_arr = np.zeros((h, kmax), dtype=np.int64)
    piv_arr = np.zeros(kmax, dtype=np.int64)
    alpha_arr = np.zeros(kmax, dtype=np.int64)
    cdef cnp.int64_t[::1] perm = perm_arr
    cdef cnp.int64_t[:, ::1] M = M_arr
    cdef cnp.int64_t[::1] pivcols = piv_arr
    cdef cnp.int64_t[::1] alphas = alpha_arr
    cdef Py_ssize_t t = 0, c, i, j, k
    cdef cnp.int64_t alpha, mult, tmp
    cdef long pp = p * p
    for c in range(bw):
        if t == h:
            break
        i = -1
        for k in range(t, h):
            if S[k, c] != 0:
                i = k
                break
        if i < 0:
            continue
        if i != t:
            for j in range(bw):
                tmp = S[t, j]
                S[t, j] = S[i, j]
                S[i, j] = tmp
            for j in range(t):
                tmp = M[t, j]
                M[t, j] = M[i, j]
                M[i, j] = tmp
            tmp = perm[t]
            perm[t] = perm[i]
            perm[i] = tmp
        alpha = inv[S[t, c]]
        if alpha != 1:
            for j in range(c, bw):
                S[t, j] = S[t, j] * alpha % p
        for k in range(t + 1, h):
            mult = S[k, c]
            M[k, t] = mult
            if mult == 0:
                continue
            for j in range(c, bw):
                S[k, j] = (S[k, j] - mult * S[t, j] + pp) % p
        pivcols[t] = c
        alphas[t] = alpha
        t += 1
    return (piv_arr[:t].copy(), perm_arr, alpha_arr[:t].copy(),
            np.ascontiguousarray(M_arr[:, :t]))
