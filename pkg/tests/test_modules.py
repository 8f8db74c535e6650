import itertools

import numpy as np
import pytest

from spechtinv import gfp
from spechtinv.partitions import char0_dim, conjugate, partitions_of
from spechtinv.tableaux import standard_tableaux
from spechtinv.modules import (
    BilinearFormData,
    ModuleRep,
    clear_caches,
    dual,
    gram_form,
    permutation_module,
    restrict,
    sign_twist,
    simple_module_D,
    specht_fixed_space,
    specht_module,
    specht_probe_relations,
    tabloid_count,
    _tableau_key,
)
from spechtinv.homological import _apply_word


def _perm_sign(col, perm):
    idx = [col.index(v) for v in perm]
    sgn = 1
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if idx[a] > idx[b]:
                sgn = -sgn
    return sgn


def _col_group(rows, lam):
    """All column-stabilizer elements as (mapping, sign) pairs."""
    elems = [({}, 1)]
    for j in range(lam[0]):
        col = [rows[i][j] for i in range(len(rows)) if j < len(rows[i])]
        new = []
        for perm in itertools.permutations(col):
            sgn = _perm_sign(col, perm)
            for mapping, s in elems:
                m2 = dict(mapping)
                m2.update({a: b for a, b in zip(col, perm)})
                new.append((m2, s * sgn))
        elems = new
    return elems


def _poly_vec(rows, lam):
    """Polytabloid of a tableau over the tabloid basis, from scratch."""
    vec = {}
    for mapping, s in _col_group(rows, lam):
        img = tuple(frozenset(mapping.get(x, x) for x in row) for row in rows)
        vec[img] = vec.get(img, 0) + s
    return vec


def _oracle_action(lam, p):
    """Generator matrices on the standard polytabloid basis, built by
    explicit column-group sums and tabloid arithmetic."""
    r = sum(lam)
    tabs = sorted(standard_tableaux(lam), key=lambda t: _tableau_key(t, r))
    d = len(tabs)
    vecs = [_poly_vec(t, lam) for t in tabs]
    keys = sorted(set(k for v in vecs for k in v))
    kidx = {k: i for i, k in enumerate(keys)}
    span = np.zeros((d, len(keys)), dtype=np.int64)
    for a, v in enumerate(vecs):
        for k, c in v.items():
            span[a, kidx[k]] = c % p
    mats = []
    for i in range(1, r):
        cols = []
        for t in tabs:
            swapped = tuple(tuple(i + 1 if x == i else
                                  (i if x == i + 1 else x) for x in row)
                            for row in t)
            sv = _poly_vec(swapped, lam)
            y = np.zeros((len(keys), 1), dtype=np.int64)
            for k, c in sv.items():
                y[kidx[k], 0] = c % p
            x = gfp.solve(np.ascontiguousarray(span.T), y, p)
            assert x is not None, "polytabloid left the Specht span"
            cols.append(x[:, 0])
        mats.append(np.array(cols).T % p)
    return mats


def test_specht_matrices_match_tabloid_oracle():
    cases = [((2, 1), 3), ((2, 2), 2), ((3, 1), 5), ((3, 2), 3),
             ((2, 2, 1), 2), ((3, 1, 1), 5), ((2, 1, 1, 1), 3),
             ((3, 3), 2), ((2, 2, 2), 3), ((3, 2, 1), 2), ((4, 2), 5)]
    for lam, p in cases:
        rep = specht_module(lam, p)
        mats = _oracle_action(lam, p)
        assert len(mats) == len(rep.action)
        for a, b in zip(rep.action, mats):
            assert np.array_equal(a, b), (lam, p)


def test_fixed_space_matches_tabloid_oracle():
    for n in (5, 6):
        for lam in partitions_of(n):
            for p in (2, 3, 5):
                mats = _oracle_action(lam, p)
                d = char0_dim(lam)
                for m in range(2, n + 1):
                    stacked = np.vstack([
                        (mats[i] - np.eye(d, dtype=np.int64)) % p
                        for i in range(m - 1)])
                    want = d - gfp.rank(stacked, p)
                    got, basis = specht_fixed_space(lam, p, m)
                    assert got == want, (lam, p, m)
                    assert basis.shape == (got, d)
                    if got:
                        # basis rows really are fixed by every generator
                        for i in range(m - 1):
                            img = gfp.matmul_mod(mats[i],
                                                 basis.T % p, p)
                            assert np.array_equal(img, basis.T % p)


def test_specht_dims_and_relations():
    cases = [((3, 2), 2), ((3, 2), 3), ((3, 2), 5), ((2, 2, 1), 3),
             ((4, 2), 2), ((3, 3), 3), ((3, 1, 1), 2), ((2, 2, 2), 5),
             ((4, 4), 3), ((4, 3, 1), 3)]
    for lam, p in cases:
        rep = specht_module(lam, p)
        assert rep.dim == char0_dim(lam)
        assert rep.n == sum(lam)
        assert rep.satisfies_relations()


def test_specht_fixed_space_frozen_values():
    assert specht_fixed_space((3, 2), 2, 2)[0] == 3
    assert specht_fixed_space((4, 2), 2, 2)[0] == 6
    assert specht_fixed_space((3, 3), 2, 2)[0] == 3
    assert specht_fixed_space((3, 1), 3, 3)[0] == 1
    assert specht_fixed_space((5, 2), 5, 5)[0] == 2
    assert specht_fixed_space((5, 2, 1), 5, 5)[0] == 3
    # m = 1 is the whole module
    d, basis = specht_fixed_space((3, 2), 3, 1)
    assert d == 5 and basis.shape == (5, 5)


def test_cyclic_data_words():
    for lam, p in [((3, 2), 3), ((2, 2, 1), 2), ((4, 2), 5), ((3, 2, 1), 3)]:
        rep = specht_module(lam, p)
        colpairs, words = rep.cyclic_data
        assert len(words) == rep.dim
        assert words[0] == ()
        e0 = np.zeros((rep.dim, 1), dtype=np.int64)
        e0[0, 0] = 1
        for k, word in enumerate(words):
            out = _apply_word(rep, word, e0)
            ek = np.zeros((rep.dim, 1), dtype=np.int64)
            ek[k, 0] = 1
            assert np.array_equal(out, ek), (lam, p, k)
        # column pairs negate the cyclic vector
        for a, b in colpairs:
            assert 1 <= a < b <= rep.n


def _kostka(lam, mu):
    """Semistandard tableaux of shape lam and content mu, counted
    directly."""
    cells = []
    for i, part in enumerate(lam):
        for j in range(part):
            cells.append((i, j))
    left = list(mu)
    grid = {}
    total = 0

    def fill(k):
        nonlocal total
        if k == len(cells):
            total += 1
            return
        i, j = cells[k]
        lo = grid.get((i, j - 1), 1)
        above = grid.get((i - 1, j))
        if above is not None:
            lo = max(lo, above + 1)
        for v in range(lo, len(left) + 1):
            if left[v - 1] == 0:
                continue
            left[v - 1] -= 1
            grid[(i, j)] = v
            fill(k + 1)
            left[v - 1] += 1
        grid.pop((i, j), None)

    fill(0)
    return total


def test_permutation_module():
    for mu, p in [((2, 1), 3), ((2, 2), 2), ((3, 1), 5), ((2, 2, 1), 3),
                  ((3, 2, 1), 2)]:
        rep = permutation_module(mu, p)
        assert rep.dim == tabloid_count(mu)
        # Young's rule at characteristic zero fixes the dimension
        assert rep.dim == sum(_kostka(lam, mu) * char0_dim(lam)
                              for lam in partitions_of(sum(mu)))
        assert rep.satisfies_relations()
        for a in rep.action:
            # permutation matrices: one 1 per row and column
            assert (a.sum(axis=0) == 1).all()
            assert (a.sum(axis=1) == 1).all()
        # the declared stabilizer generators fix basis vector 0
        e0 = np.zeros((rep.dim, 1), dtype=np.int64)
        e0[0, 0] = 1
        for i in rep.stab_gens:
            assert np.array_equal(gfp.matmul_mod(rep.generator(i), e0, p), e0)
    assert tabloid_count((1, 1, 1, 1, 1)) == 120
    with pytest.raises(ValueError):
        permutation_module((2, 1), 3, n=4)


def test_gram_ranks_p3():
    table = {(6, 2): 13, (4, 4): 1, (5, 3): 28, (5, 2, 1): 35, (4, 3, 1): 7}
    for mu, want in table.items():
        assert gram_form(mu, 3).rank() == want


def test_gram_ranks_p5():
    table = {(4, 4, 2): 34, (4, 3, 2): 34, (5, 3, 1): 134, (7, 1, 1): 28,
             (5, 4, 1): 217}
    for mu, want in table.items():
        assert gram_form(mu, 5).rank() == want
    clear_caches()


def test_gram_full_rank_when_p_large():
    # p above the degree: the form is nondegenerate
    for lam in [(3, 2), (2, 2, 1), (4, 1)]:
        form = gram_form(lam, 7)
        assert form.rank() == char0_dim(lam)
        assert isinstance(form, BilinearFormData)
        assert np.array_equal(form.gram, form.gram.T)


def test_simple_module_D():
    d44 = simple_module_D((4, 4), 3)
    assert d44.dim == 1
    d431 = simple_module_D((4, 3, 1), 3)
    assert d431.dim == 7
    assert d431.satisfies_relations()
    d62 = simple_module_D((6, 2), 3)
    assert d62.dim == 13
    assert d62.satisfies_relations()
    # p past the degree leaves Specht simple already
    assert simple_module_D((3, 2), 7).dim == 5
    with pytest.raises(ValueError):
        simple_module_D((2, 2, 2), 2)
    clear_caches()


def test_twists_and_duals():
    rep = specht_module((3, 2), 3)
    tw = sign_twist(rep)
    assert tw.dim == rep.dim
    assert tw.satisfies_relations()
    back = sign_twist(tw)
    for a, b in zip(back.action, rep.action):
        assert np.array_equal(a, b)
    dd = dual(dual(rep))
    for a, b in zip(dd.action, rep.action):
        assert np.array_equal(a, b)
    assert dual(rep).satisfies_relations()


def test_restrict():
    rep = specht_module((3, 2), 3)
    low = restrict(rep, [1, 2])
    assert low.n == 3
    assert low.satisfies_relations()
    high = restrict(rep, [3, 4])
    assert high.n == 3
    with pytest.raises(ValueError):
        restrict(rep, [1, 3])
    with pytest.raises(ValueError):
        restrict(rep, [])
    with pytest.raises(ValueError):
        restrict(rep, [4, 5])


def test_module_rep_dump_roundtrip():
    rep = specht_module((3, 1), 3)
    text = rep.dump()
    rep2 = ModuleRep.load(text)
    assert rep2.n == rep.n and rep2.p == rep.p and rep2.dim == rep.dim
    assert rep2.label == rep.label
    for a, b in zip(rep2.action, rep.action):
        assert np.array_equal(a, b)
    bad = "x 2 3 1\n5 1 1\n0\n"
    with pytest.raises(ValueError):
        ModuleRep.load(bad)


def test_module_rep_validation():
    with pytest.raises(ValueError):
        ModuleRep(3, 3, [np.eye(2, dtype=np.int64)], "short")
    with pytest.raises(ValueError):
        ModuleRep(2, 3, [np.zeros((2, 3), dtype=np.int64)], "ragged")
    with pytest.raises(ValueError):
        ModuleRep(1, 3, [], "no dim")
    triv = ModuleRep(1, 3, [], "triv", dim=1)
    assert triv.dim == 1
    assert triv.satisfies_relations()


def test_caps_and_errors():
    with pytest.raises(ValueError):
        specht_module((5, 5, 5), 5)
    with pytest.raises(ValueError):
        permutation_module((1, 1, 1, 1, 1, 1, 1), 2)
    with pytest.raises(ValueError):
        specht_module((16,), 3)
    with pytest.raises(ValueError):
        specht_module((), 3)
    with pytest.raises(ValueError):
        specht_fixed_space((3, 2), 3, 6)
    with pytest.raises(ValueError):
        specht_fixed_space((3, 2), 3, 0)


def test_probe_relations():
    assert specht_probe_relations((4, 3, 1), 3, upto=5)
    clear_caches()


def test_clear_caches_keeps_results():
    before = specht_fixed_space((4, 2), 2, 2)[0]
    clear_caches()
    after = specht_fixed_space((4, 2), 2, 2)[0]
    assert before == after == 6
