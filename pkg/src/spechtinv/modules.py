"""Explicit construction of permutation modules M(lam), Specht modules
Sp(lam), the bilinear form, simple heads D^mu, sign twists, duals, and
restriction to subgroup generator sets.

Conventions.  Matrices act on column vectors, so rho(g h) = rho(g) @ rho(h).
A tabloid is encoded by its row word (the row index of each letter 1..r)
packed base 16 into an int64, most significant nibble first; this bounds the
degree by 15, comfortably above everything desk scale.  Numeric key order
therefore equals lexicographic order on row words, which refines dominance
of tabloids.  For a standard tableau T the key of {T} is the strict minimum
of the support of the polytabloid e_T (any column permutation moves the
least letter it rehouses strictly down its column), so with the standard
tableaux sorted by key the matrix of polytabloid coefficients at standard
tabloid columns is unit upper triangular.  Generator matrices come from
solving against that triangular matrix, which avoids Garnir rewriting; a
Garnir-flavoured oracle cross-checks small degrees in the test suite.
"""

from itertools import permutations
from math import comb, factorial

import numpy as np
import scipy.sparse
from sympy.utilities.iterables import multiset_permutations

from . import gfp
from .partitions import char0_dim, conjugate, degree, format_partition, \
    is_p_regular, validate_partition
from .symgroup import coxeter_relations
from .tableaux import standard_tableaux

MULTINOMIAL_CAP = 200000
DENSE_CAP = 3000
CSTAB_ENUM_CAP = 150000
SUPPORT_ENTRY_CAP = 80_000_000
RELATION_FULL_CAP = 600
RELATION_PROBES = 20

_standard_cache = {}
_support_cache = {}
_m0_cache = {}
_specht_cache = {}
_simple_cache = {}
_perm_words = {}


def clear_caches():
    """Drop all shape-keyed caches.  Sweeps over many large shapes must
    call this between shapes or the cached coefficient matrices exhaust
    memory."""
    for cache in (_standard_cache, _support_cache, _m0_cache,
                  _specht_cache, _simple_cache, _perm_words):
        cache.clear()


class ModuleRep:
    """A module for the degree-n symmetric group over GF(p).

    action[i] is the matrix of the Coxeter generator s_{i+1}; matrices act
    on column vectors.
    """

    __slots__ = ("n", "p", "dim", "action", "label", "stab_gens",
                 "cyclic_data")

    def __init__(self, n, p, action, label, dim=None):
        self.n = n
        self.p = p
        self.action = [gfp.as_residues(a, p) for a in action]
        if len(self.action) != max(n - 1, 0):
            raise ValueError("need %d generator matrices, got %d"
                             % (n - 1, len(self.action)))
        if self.action:
            self.dim = self.action[0].shape[0]
        elif dim is None:
            raise ValueError("dim required when there are no generators")
        else:
            self.dim = dim
        for a in self.action:
            if a.shape != (self.dim, self.dim):
                raise ValueError("generator matrices must be square of "
                                 "equal size")
        self.label = label
        # optional structure used by hom_space fast paths
        self.stab_gens = None       # generator indices fixing basis vector 0
        self.cyclic_data = None     # (colpairs, words) for a cyclic source

    def generator(self, i):
        """Matrix of s_i, 1-based."""
        return self.action[i - 1]

    def apply_word(self, word, vecs):
        """Apply a 1-based generator-index word to column vectors."""
        out = gfp.as_residues(vecs, self.p)
        for idx in reversed(word):
            out = gfp.matmul_mod(self.action[idx - 1], out, self.p)
        return out

    def satisfies_relations(self, rng=None):
        """Check the Coxeter relations: full matrix identities up to
        RELATION_FULL_CAP dimensions, seeded probe vectors beyond."""
        if self.n < 2:
            return True
        pres = coxeter_relations(self.n)
        if self.dim <= RELATION_FULL_CAP:
            eye = np.eye(self.dim, dtype=np.int64)
            for word in pres.relations:
                prod = eye
                for idx in word:
                    prod = gfp.matmul_mod(prod, self.action[idx - 1], self.p)
                if not np.array_equal(prod, eye):
                    return False
            return True
        rng = np.random.default_rng(0) if rng is None else rng
        probes = rng.integers(0, self.p, size=(self.dim, RELATION_PROBES))
        for word in pres.relations:
            if not np.array_equal(self.apply_word(word, probes), probes):
                return False
        return True

    def dump(self):
        """Serialize as a header line 'label n p dim' plus matrix dumps."""
        parts = ["%s %d %d %d" % (self.label, self.n, self.p, self.dim)]
        for a in self.action:
            parts.append(gfp.GFMatrix(a, self.p).dump().rstrip("\n"))
        return "\n".join(parts) + "\n"

    @classmethod
    def load(cls, text):
        lines = text.splitlines()
        head = lines[0].rsplit(None, 3)
        label, n, p, dim = head[0], int(head[1]), int(head[2]), int(head[3])
        body = "\n".join(lines[1:])
        toks = body.split()
        action = []
        pos = 0
        for _ in range(max(n - 1, 0)):
            mp, rows, cols = (int(t) for t in toks[pos:pos + 3])
            cnt = rows * cols
            vals = [int(t) for t in toks[pos + 3:pos + 3 + cnt]]
            action.append(np.array(vals, dtype=np.int64).reshape(rows, cols))
            pos += 3 + cnt
            if mp != p:
                raise ValueError("modulus mismatch in dump")
        rep = cls(n, p, action, label, dim=dim)
        if rep.dim != dim:
            raise ValueError("dimension mismatch in dump")
        return rep

    def __repr__(self):
        return "ModuleRep(%s, n=%d, p=%d, dim=%d)" % (self.label, self.n,
                                                      self.p, self.dim)


class BilinearFormData:
    """Gram matrix of the tabloid inner product on the standard basis."""

    __slots__ = ("gram", "p")

    def __init__(self, gram, p):
        self.gram = gfp.as_residues(gram, p)
        self.p = p

    def rank(self):
        return gfp.rank(self.gram, self.p)


def _check_degree(lam):
    r = degree(lam)
    if r > 15:
        raise ValueError("degree %d exceeds the packed-key limit of 15" % r)
    return r


def _pack_words(words):
    """Pack row-word rows (2-D, values 1..15) into int64 keys."""
    nt, r = words.shape
    keys = np.zeros(nt, dtype=np.int64)
    for k in range(r):
        keys = (keys << 4) | words[:, k].astype(np.int64)
    return keys


def _unpack_keys(keys, r):
    out = np.empty((len(keys), r), dtype=np.int8)
    for k in range(r):
        out[:, k] = (keys >> (4 * (r - 1 - k))) & 15
    return out


def _swap_keys(keys, i, r):
    """Keys of the s_i images: swap the nibbles of letters i and i+1."""
    sh1 = 4 * (r - i)
    sh2 = 4 * (r - 1 - i)
    a = (keys >> sh1) & 15
    b = (keys >> sh2) & 15
    x = a ^ b
    return keys ^ ((x << sh1) | (x << sh2))


def _tableau_key(rows, r):
    word = [0] * r
    for i, row in enumerate(rows):
        for letter in row:
            word[letter - 1] = i + 1
    key = 0
    for v in word:
        key = (key << 4) | v
    return key


def _standard_basis(lam):
    """Standard tableaux of shape lam sorted by tabloid key, plus the keys."""
    if lam in _standard_cache:
        return _standard_cache[lam]
    r = _check_degree(lam)
    tabs = standard_tableaux(lam)
    keyed = sorted((( _tableau_key(t, r), t) for t in tabs))
    keys = np.array([k for k, _ in keyed], dtype=np.int64)
    tabs = [t for _, t in keyed]
    assert len(np.unique(keys)) == len(keys)
    _standard_cache[lam] = (tabs, keys)
    return tabs, keys


_perm_tables = {}


def _perm_table(h):
    """All permutations of range(h) as an array, with their signs."""
    if h not in _perm_tables:
        perms = list(permutations(range(h)))
        imgs = np.array(perms, dtype=np.int64)
        signs = np.empty(len(perms), dtype=np.int8)
        for idx, pi in enumerate(perms):
            inv = sum(1 for s in range(h) for t in range(s + 1, h)
                      if pi[s] > pi[t])
            signs[idx] = -1 if inv & 1 else 1
        _perm_tables[h] = (imgs, signs)
    return _perm_tables[h]


def _columns_of(tab):
    width = len(tab[0])
    return [tuple(row[j] for row in tab if len(row) > j)
            for j in range(width)]


def _cstab_order(lam):
    return int(np.prod([factorial(h) for h in conjugate(lam)], dtype=object))


def _supports(lam):
    """Sorted (keys, signs) of every standard polytabloid, concatenated.

    Returns (all_keys, all_signs, offsets) or None when the column
    stabilizer is too large to enumerate.
    """
    if lam in _support_cache:
        return _support_cache[lam]
    r = _check_degree(lam)
    tabs, keys = _standard_basis(lam)
    cstab = _cstab_order(lam)
    if cstab > CSTAB_ENUM_CAP or cstab * len(tabs) > SUPPORT_ENTRY_CAP:
        _support_cache[lam] = None
        return None
    all_keys = np.empty(cstab * len(tabs), dtype=np.int64)
    all_signs = np.empty(cstab * len(tabs), dtype=np.int8)
    offsets = np.arange(0, cstab * len(tabs) + 1, cstab, dtype=np.int64)
    for a, tab in enumerate(tabs):
        k = None
        s = None
        for col in _columns_of(tab):
            h = len(col)
            imgs, signs = _perm_table(h)
            pows = np.array([1 << (4 * (r - letter)) for letter in col],
                            dtype=np.int64)
            contrib = (imgs + 1) @ pows
            if k is None:
                k, s = contrib, signs
            else:
                k = (k[:, None] + contrib[None, :]).ravel()
                s = (s[:, None] * signs[None, :]).ravel()
        order = np.argsort(k, kind="stable")
        all_keys[offsets[a]:offsets[a + 1]] = k[order]
        all_signs[offsets[a]:offsets[a + 1]] = s[order]
    _support_cache[lam] = (all_keys, all_signs, offsets)
    return _support_cache[lam]


def _coeffs_entrywise(lam, targets):
    """Polytabloid coefficients at the target keys, one tableau at a time,
    without enumerating the column stabilizer."""
    r = _check_degree(lam)
    tabs, _ = _standard_basis(lam)
    words = _unpack_keys(targets, r)
    out = np.zeros((len(tabs), len(targets)), dtype=np.int8)
    for a, tab in enumerate(tabs):
        coeff = np.ones(len(targets), dtype=np.int64)
        valid = np.ones(len(targets), dtype=bool)
        for col in _columns_of(tab):
            h = len(col)
            sub = words[:, np.array(col) - 1].astype(np.int64)
            srt = np.sort(sub, axis=1)
            valid &= (srt == np.arange(1, h + 1)).all(axis=1)
            inv = np.zeros(len(targets), dtype=np.int64)
            for s in range(h):
                for t in range(s + 1, h):
                    inv += sub[:, s] > sub[:, t]
            coeff *= 1 - 2 * (inv & 1)
        coeff[~valid] = 0
        out[a] = coeff.astype(np.int8)
    return out


def _coeffs_for_targets(lam, targets):
    """d x len(targets) int8 matrix of polytabloid coefficients (+-1, 0)."""
    sup = _supports(lam)
    if sup is None:
        return _coeffs_entrywise(lam, targets)
    all_keys, all_signs, offsets = sup
    d = len(offsets) - 1
    out = np.zeros((d, len(targets)), dtype=np.int8)
    for a in range(d):
        ka = all_keys[offsets[a]:offsets[a + 1]]
        sa = all_signs[offsets[a]:offsets[a + 1]]
        idx = np.searchsorted(ka, targets)
        idx = np.minimum(idx, len(ka) - 1)
        hit = ka[idx] == targets
        out[a, hit] = sa[idx[hit]]
    return out


def _m0(lam):
    """Unit upper triangular coefficient matrix at standard tabloid keys."""
    if lam not in _m0_cache:
        _, keys = _standard_basis(lam)
        m0 = _coeffs_for_targets(lam, keys)
        assert (np.diagonal(m0) == 1).all()
        assert np.count_nonzero(np.tril(m0, -1)) == 0
        _m0_cache[lam] = m0
    return _m0_cache[lam]


def _ei_l(lam, i):
    """Coefficients of every polytabloid at the s_i images of the standard
    tabloid keys."""
    r = degree(lam)
    _, keys = _standard_basis(lam)
    return _coeffs_for_targets(lam, _swap_keys(keys, i, r))


def tabloid_count(lam):
    count = 1
    rem = degree(lam)
    for part in lam:
        count *= comb(rem, part)
        rem -= part
    return count


def specht_module(lam, p):
    """The Specht module Sp(lam) over GF(p) on the standard basis."""
    validate_partition(lam)
    if degree(lam) == 0:
        raise ValueError("Sp of the empty partition is not constructed")
    key = (lam, p)
    if key in _specht_cache:
        return _specht_cache[key]
    r = _check_degree(lam)
    d = char0_dim(lam)
    if d > DENSE_CAP:
        raise ValueError("dim Sp%s = %d exceeds the dense module cap %d; "
                         "use specht_fixed_space for invariants"
                         % (format_partition(lam), d, DENSE_CAP))
    m0 = _m0(lam).astype(np.int64) % p
    action = []
    for i in range(1, r):
        ei = _ei_l(lam, i).astype(np.int64) % p
        mat = gfp.solve_unit_lower(m0.T, ei.T, p)
        action.append(mat)
    label = "Sp(%s) over GF(%d)" % (format_partition(lam), p)
    rep = ModuleRep(r, p, action, label)
    assert rep.dim == d
    rep.cyclic_data = _cyclic_data(lam)
    _specht_cache[key] = rep
    return rep


def _descent_word(images):
    """Adjacent-transposition word for the permutation with these images.

    images[x-1] is the image of x.  Returns indices (i1, .., iL) such that
    applying s_{i1} first, then s_{i2}, and so on reproduces the
    permutation; as matrices rho(s_iL) @ .. @ rho(s_i1).
    """
    cur = list(images)
    word = []
    j = 0
    while j < len(cur) - 1:
        if cur[j] > cur[j + 1]:
            cur[j], cur[j + 1] = cur[j + 1], cur[j]
            word.append(j + 1)
            j = max(j - 1, 0)
        else:
            j += 1
    return tuple(word)


def _cyclic_data(lam):
    """Column transpositions and basis words for the cyclic vector of Sp.

    The smallest-key standard tableau is the row-filled one, T0.  Each
    standard basis vector e_k equals pi_k e_0 where pi_k sends the entry of
    T0 in each cell to the entry of tableau k, so a Hom out of Sp(lam) is
    pinned down by the image of e_0.  Returns (colpairs, words): colpairs
    are the adjacent-in-column transpositions (a, b) of T0, words[k] is the
    adjacent-transposition word for pi_k.
    """
    tabs, _ = _standard_basis(lam)
    r = degree(lam)
    t0 = tabs[0]
    offs = [0]
    for part in lam:
        offs.append(offs[-1] + part)
    assert all(t0[i] == tuple(range(offs[i] + 1, offs[i + 1] + 1))
               for i in range(len(lam)))
    conj = conjugate(lam)
    colpairs = []
    for j, h in enumerate(conj):
        for i in range(h - 1):
            colpairs.append((t0[i][j], t0[i + 1][j]))
    words = []
    for t in tabs:
        img = [0] * r
        for i, row in enumerate(t0):
            for j, entry in enumerate(row):
                img[entry - 1] = t[i][j]
        words.append(_descent_word(img))
    return colpairs, words


def specht_fixed_space(lam, p, m):
    """Dimension and basis of the subgroup-invariant vectors of Sp(lam).

    The subgroup is the one permuting {1..m}.  Returns (dim, basis) with
    basis rows giving coordinates on the standard polytabloid basis.  Never
    materializes generator matrices: a coordinate vector v is fixed by s_i
    exactly when (E_i - M0)^T v = 0, with E_i the polytabloid coefficients
    at the s_i-swapped standard tabloid keys, so the fixed space is an
    iterated kernel.
    """
    validate_partition(lam)
    r = _check_degree(lam)
    if not 1 <= m <= r:
        raise ValueError("need 1 <= m <= degree, got m=%d" % m)
    d = char0_dim(lam)
    if m == 1:
        return d, np.eye(d, dtype=np.int64)
    m0 = _m0(lam).astype(np.int64)
    basis = None
    for i in range(1, m):
        bi = (_ei_l(lam, i).astype(np.int64) - m0) % p
        if basis is None:
            basis = gfp.kernel_basis(np.ascontiguousarray(bi.T), p)
        else:
            w = gfp.matmul_mod(basis, bi, p)
            x = gfp.kernel_basis(np.ascontiguousarray(w.T), p)
            basis = gfp.matmul_mod(x, basis, p)
        if basis.shape[0] == 0:
            return 0, np.zeros((0, d), dtype=np.int64)
    return basis.shape[0], basis


def specht_probe_relations(lam, p, upto, rng=None, probes=RELATION_PROBES):
    """Probe-vector check of the Coxeter relations among s_1..s_upto for a
    Specht module too large to materialize.

    Generator action on coordinates is applied implicitly: s_i v solves
    M0^T w = E_i^T v.  Returns True when every relation word fixes every
    probe column.
    """
    r = _check_degree(lam)
    if upto < 1:
        return True
    d = char0_dim(lam)
    rng = np.random.default_rng(0) if rng is None else rng
    m0t = np.ascontiguousarray(_m0(lam).astype(np.int64).T) % p
    eit = {}
    for i in range(1, upto + 1):
        eit[i] = np.ascontiguousarray(_ei_l(lam, i).astype(np.int64).T) % p

    def apply_gen(i, vecs):
        return gfp.solve_unit_lower(m0t, gfp.matmul_mod(eit[i], vecs, p), p)

    vecs = rng.integers(0, p, size=(d, probes))
    rels = []
    for i in range(1, upto + 1):
        rels.append((i, i))
    for i in range(1, upto):
        rels.append((i, i + 1) * 3)
    for i in range(1, upto + 1):
        for j in range(i + 2, upto + 1):
            rels.append((i, j) * 2)
    for word in rels:
        out = vecs
        for idx in reversed(word):
            out = apply_gen(idx, out)
        if not np.array_equal(out, vecs):
            return False
    return True


def _word_arrays(lam):
    """Sorted tabloid keys for M(lam), cached."""
    if lam in _perm_words:
        return _perm_words[lam]
    r = _check_degree(lam)
    count = tabloid_count(lam)
    if count > MULTINOMIAL_CAP:
        raise ValueError("M%s has %d tabloids, over the cap %d"
                         % (format_partition(lam), count, MULTINOMIAL_CAP))
    word = []
    for i, part in enumerate(lam):
        word.extend([i + 1] * part)
    words = np.array(list(multiset_permutations(word)), dtype=np.int8)
    keys = np.sort(_pack_words(words))
    assert len(keys) == count
    _perm_words[lam] = keys
    return keys


def permutation_module(lam, p, n=None):
    """The tabloid permutation module M(lam) over GF(p)."""
    validate_partition(lam)
    r = _check_degree(lam)
    if n is not None and n != r:
        raise ValueError("M(lam) acts for the symmetric group of degree "
                         "%d, got n=%d" % (r, n))
    if r == 0:
        raise ValueError("M of the empty partition is not constructed")
    keys = _word_arrays(lam)
    count = len(keys)
    if count > DENSE_CAP:
        raise ValueError("M%s is %d dimensional, over the dense module cap "
                         "%d" % (format_partition(lam), count, DENSE_CAP))
    action = []
    for i in range(1, r):
        tgt = np.searchsorted(keys, _swap_keys(keys, i, r))
        mat = np.zeros((count, count), dtype=np.int64)
        mat[tgt, np.arange(count)] = 1
        action.append(mat)
    label = "M(%s) over GF(%d)" % (format_partition(lam), p)
    rep = ModuleRep(r, p, action, label)
    # basis vector 0 is the tabloid with rows filled in order, so its
    # stabilizer is the Young subgroup of lam
    stab = []
    off = 0
    for part in lam:
        stab.extend(range(off + 1, off + part))
        off += part
    rep.stab_gens = stab
    return rep


def gram_form(lam, p):
    """Gram matrix of the tabloid inner product on standard polytabloids."""
    validate_partition(lam)
    sup = _supports(lam)
    if sup is None:
        raise ValueError("column stabilizer of %s too large for the Gram "
                         "construction" % (format_partition(lam),))
    all_keys, all_signs, offsets = sup
    d = len(offsets) - 1
    uniq, inverse = np.unique(all_keys, return_inverse=True)
    mat = scipy.sparse.csr_matrix(
        (all_signs.astype(np.int64), inverse, offsets),
        shape=(d, len(uniq)))
    gram = np.asarray((mat @ mat.T).todense()) % p
    return BilinearFormData(gram, p)


def simple_module_D(mu, p):
    """The simple head D^mu = Sp(mu) modulo the radical of the form."""
    validate_partition(mu)
    if not is_p_regular(mu, p):
        raise ValueError("%s is not %d-regular" % (format_partition(mu), p))
    key = (mu, p)
    if key in _simple_cache:
        return _simple_cache[key]
    rep = specht_module(mu, p)
    form = gram_form(mu, p)
    rad_all = gfp.kernel_basis(form.gram, p)
    reduced, piv = gfp.rref(rad_all, p)
    rad = reduced[:len(piv)]
    d = rep.dim
    keep = [c for c in range(d) if c not in set(piv)]
    action = []
    for a in rep.action:
        aq = a[:, keep]
        quo = aq[keep, :]
        if rad.shape[0]:
            quo = (quo - rad[:, keep].T @ aq[list(piv), :]) % p
        action.append(quo)
    label = "D(%s) over GF(%d)" % (format_partition(mu), p)
    simple = ModuleRep(rep.n, p, action, label)
    assert simple.dim == d - rad.shape[0]
    colpairs, words = rep.cyclic_data
    simple.cyclic_data = (colpairs, [words[q] for q in keep])
    _simple_cache[key] = simple
    return simple


def sign_twist(v):
    """Tensor with the sign module: negate every generator matrix."""
    action = [(-a) % v.p for a in v.action]
    return ModuleRep(v.n, v.p, action, "sgn*" + v.label)


def dual(v):
    """Contragredient module; generators are involutions, so transpose."""
    action = [np.ascontiguousarray(a.T) for a in v.action]
    return ModuleRep(v.n, v.p, action, "dual " + v.label)


def restrict(v, indices):
    """Restrict to the subgroup generated by s_i for i in indices.

    indices must be consecutive (a contiguous run i0, i0+1, .., i1) so the
    result is a symmetric group module again, with generators relabelled to
    s_1..s_{i1-i0+1}.
    """
    idx = sorted(indices)
    if not idx:
        raise ValueError("empty generator selection")
    if idx != list(range(idx[0], idx[-1] + 1)):
        raise ValueError("generator indices must be consecutive")
    if idx[0] < 1 or idx[-1] > v.n - 1:
        raise ValueError("generator index out of range")
    action = [v.action[i - 1] for i in idx]
    label = "%s | s_%d..s_%d" % (v.label, idx[0], idx[-1])
    return ModuleRep(len(idx) + 1, v.p, action, label)
