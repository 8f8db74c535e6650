"""Fixed-point modules, Hom spaces and first cohomology for ModuleReps.

Conventions follow modules.py: vectors are columns, generator i acts by
v -> action[i-1] @ v, and subspace bases are stored as row matrices of
coordinates.
"""

import numpy as np

from . import gfp
from .gfp import matmul_mod
from .modules import ModuleRep
from .symgroup import coxeter_relations

KRON_CAP = 4096
H1_CAP = 4000
CYCLIC_ENTRY_CAP = 200_000_000


def invariant_basis(v, gen_indices=None):
    """Rows spanning the common fixed space of the listed generators.

    gen_indices are 1-based Coxeter generator indices; None means all of
    them.  Works by iterated kernel restriction so only the first step
    touches a full dim x dim matrix.
    """
    if gen_indices is None:
        gen_indices = range(1, v.n)
    idx = list(gen_indices)
    for i in idx:
        if not 1 <= i <= v.n - 1:
            raise ValueError("generator index %d out of range" % i)
    p = v.p
    basis = np.eye(v.dim, dtype=np.int64)
    for i in idx:
        a = (v.action[i - 1] - np.eye(v.dim, dtype=np.int64)) % p
        w = matmul_mod(a, np.ascontiguousarray(basis.T), p)
        coeffs = gfp.kernel_basis(w, p)
        basis = matmul_mod(coeffs, basis, p)
        if basis.shape[0] == 0:
            break
    return basis


class FixedPointModule:
    """Invariants of a ModuleRep under the subgroup permuting {1..m}.

    basis rows give the invariant vectors in ambient coordinates; induced
    is the action of the complementary symmetric group on {m+1..n},
    relabelled as a degree n-m module.
    """

    __slots__ = ("ambient", "m", "basis", "induced")

    def __init__(self, ambient, m, basis, induced):
        self.ambient = ambient
        self.m = m
        self.basis = basis
        self.induced = induced

    @property
    def dim(self):
        return self.basis.shape[0]


def fixed_points(v, m):
    """Compute the Sigma_m fixed points of v with the induced action."""
    if not 1 <= m < v.n:
        raise ValueError("need 1 <= m < n, got m=%d for n=%d" % (m, v.n))
    p = v.p
    basis = invariant_basis(v, range(1, m))
    f = basis.shape[0]
    label = "F_%d(%s)" % (m, v.label)
    bt = np.ascontiguousarray(basis.T)
    action = []
    for j in range(m + 1, v.n):
        img = matmul_mod(v.action[j - 1], bt, p)
        x = gfp.solve(bt, img, p)
        assert x is not None, "fixed space not stable, which cannot happen"
        action.append(np.ascontiguousarray(x))
    induced = ModuleRep(max(v.n - m, 1), p, action, label, dim=f)
    return FixedPointModule(v, m, basis, induced)


def _perm_matrix(w, a, b, cache):
    """Matrix of the transposition (a b) on w, built up by conjugation."""
    if (a, b) in cache:
        return cache[(a, b)]
    if b == a + 1:
        mat = w.action[a - 1]
    else:
        s = w.action[b - 2]
        mat = matmul_mod(s, matmul_mod(_perm_matrix(w, a, b - 1, cache), s,
                                       w.p), w.p)
    cache[(a, b)] = mat
    return mat


def _apply_word(w, word, vecs):
    """Apply rho(word) to column vectors, first letter acting first."""
    out = vecs
    for i in word:
        out = matmul_mod(w.action[i - 1], out, w.p)
    return out


def _hom_kron(v, w, maps):
    """Hom by intersecting generator constraint kernels on vec(X)."""
    p = v.p
    dv, dw = v.dim, w.dim
    basis = np.eye(dv * dw, dtype=np.int64)
    for av, aw in zip(v.action, w.action):
        c = (np.kron(np.eye(dw, dtype=np.int64), av.T)
             - np.kron(aw, np.eye(dv, dtype=np.int64))) % p
        img = matmul_mod(c, np.ascontiguousarray(basis.T), p)
        coeffs = gfp.kernel_basis(img, p)
        basis = matmul_mod(coeffs, basis, p)
        if basis.shape[0] == 0:
            break
    dim = basis.shape[0]
    if not maps:
        return dim, None
    return dim, [x.reshape(dw, dv) for x in basis]


def _hom_cyclic(v, w, maps):
    """Hom out of a cyclic source, parameterized by the generator image.

    An equivariant X is pinned by u = X e_0: basis vector k of v is a
    word translate of e_0, so X e_k = rho_w(word_k) u.  Candidate u are
    first cut down by the column transposition conditions rho(t) u = -u,
    then the exact equivariance residuals select the Hom space.
    """
    p = v.p
    dv, dw = v.dim, w.dim
    colpairs, words = v.cyclic_data
    cache = {}
    if colpairs:
        eye = np.eye(dw, dtype=np.int64)
        stack = np.vstack([(_perm_matrix(w, a, b, cache) + eye) % p
                           for a, b in colpairs])
        cand = gfp.kernel_basis(stack, p)
    else:
        cand = np.eye(dw, dtype=np.int64)
    g = cand.shape[0]
    if g == 0:
        return 0, ([] if maps else None)
    if g * dv * dw > CYCLIC_ENTRY_CAP:
        raise ValueError("hom_space candidate block for %s -> %s too "
                         "large" % (v.label, w.label))
    u0 = np.ascontiguousarray(cand.T)
    cols = np.empty((dv, dw, g), dtype=np.int64)
    for k, word in enumerate(words):
        cols[k] = _apply_word(w, word, u0)
    coeffs = np.eye(g, dtype=np.int64)
    for av, aw in zip(v.action, w.action):
        left = np.tensordot(aw, cols, axes=([1], [1])) % p
        left = left.transpose(1, 0, 2)
        right = np.tensordot(cols, av, axes=([0], [0])) % p
        right = right.transpose(2, 0, 1)
        resid = ((left - right) % p).reshape(dv * dw, g)
        img = matmul_mod(resid % p, np.ascontiguousarray(coeffs.T), p)
        cut = gfp.kernel_basis(img, p)
        coeffs = matmul_mod(cut, coeffs, p)
        if coeffs.shape[0] == 0:
            break
    dim = coeffs.shape[0]
    if not maps:
        return dim, None
    out = []
    for c in coeffs:
        x = np.tensordot(cols, c, axes=([2], [0])) % p
        out.append(np.ascontiguousarray(x.T))
    return dim, out


def _hom_induced(v, w, maps):
    """Hom out of a permutation module via the orbit stabilizer."""
    p = v.p
    cand = invariant_basis(w, v.stab_gens)
    dim = cand.shape[0]
    if not maps:
        return dim, None
    # recover each basis index of v from index 0 by a generator word
    word_of = {0: ()}
    frontier = [0]
    while frontier:
        nxt = []
        for k in frontier:
            for i, a in enumerate(v.action, start=1):
                t = int(np.argmax(a[:, k]))
                if t not in word_of:
                    word_of[t] = word_of[k] + (i,)
                    nxt.append(t)
        frontier = nxt
    assert len(word_of) == v.dim, "source is not a transitive " \
        "permutation module"
    out = []
    for u in cand:
        x = np.empty((w.dim, v.dim), dtype=np.int64)
        for k in range(v.dim):
            x[:, k] = _apply_word(w, word_of[k], u % p)
        out.append(x)
    return dim, out


def hom_space(v, w, maps=False):
    """Dimension (and optionally a basis) of the equivariant maps v -> w.

    Returns (dim, basis) where basis is a list of dim(w) x dim(v)
    matrices when maps is True, else None.
    """
    if v.n != w.n:
        raise ValueError("modules are for different symmetric groups "
                         "(%d vs %d)" % (v.n, w.n))
    if v.p != w.p:
        raise ValueError("modules are over different primes (%d vs %d)"
                         % (v.p, w.p))
    if v.stab_gens is not None:
        return _hom_induced(v, w, maps)
    if v.cyclic_data is not None:
        return _hom_cyclic(v, w, maps)
    if v.dim * w.dim > KRON_CAP:
        raise ValueError("hom_space needs a cyclic source or product of "
                         "dimensions at most %d" % KRON_CAP)
    return _hom_kron(v, w, maps)


def h1_dimension(v):
    """dim H^1(Sigma_n, v) from the Coxeter presentation.

    Cocycles are solved from the relation words (each relation word R
    contributes sum_j rho(prefix_j) z(letter_j) = 0); coboundaries have
    dimension dim v - dim of the invariants.
    """
    n, p, d = v.n, v.p, v.dim
    if n < 2:
        return 0
    if (n - 1) * d > H1_CAP:
        raise ValueError("H^1 system for %s too large" % v.label)
    eye = np.eye(d, dtype=np.int64)
    blocks = []
    for rel in coxeter_relations(n).relations:
        block = np.zeros((d, (n - 1) * d), dtype=np.int64)
        prefix = eye
        for idx in rel:
            lo = (idx - 1) * d
            block[:, lo:lo + d] = (block[:, lo:lo + d] + prefix) % p
            prefix = matmul_mod(prefix, v.action[idx - 1], p)
        # each relation word multiplies out to the identity
        assert (prefix == eye).all()
        blocks.append(block)
    z1 = gfp.kernel_basis(np.vstack(blocks), p).shape[0]
    b1 = d - invariant_basis(v).shape[0]
    return z1 - b1


def socle_mult(d_rep, v):
    """Multiplicity of the simple d_rep in the socle of v."""
    return hom_space(d_rep, v)[0]


def head_mult(v, d_rep):
    """Multiplicity of the simple d_rep in the head of v."""
    return hom_space(v, d_rep)[0]
