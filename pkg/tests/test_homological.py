import numpy as np
import pytest

from spechtinv import gfp
from spechtinv.partitions import char0_dim, conjugate, partitions_of
from spechtinv.symgroup import Permutation, coxeter_generators
from spechtinv.modules import (
    ModuleRep,
    clear_caches,
    dual,
    permutation_module,
    sign_twist,
    simple_module_D,
    specht_fixed_space,
    specht_module,
)
from spechtinv.homological import (
    fixed_points,
    h1_dimension,
    head_mult,
    hom_space,
    invariant_basis,
    socle_mult,
    _hom_kron,
)


def test_invariant_basis_against_direct_kernel():
    for lam, p in [((3, 2), 2), ((3, 2), 3), ((2, 2, 1), 3), ((4, 2), 2)]:
        rep = specht_module(lam, p)
        d = rep.dim
        for upto in range(2, rep.n + 1):
            idx = list(range(1, upto))
            basis = invariant_basis(rep, idx)
            stacked = np.vstack([
                (rep.action[i - 1] - np.eye(d, dtype=np.int64)) % p
                for i in idx])
            assert basis.shape[0] == d - gfp.rank(stacked, p)
            if basis.shape[0]:
                prod = gfp.matmul_mod(stacked,
                                      np.ascontiguousarray(basis.T), p)
                assert not prod.any()
    with pytest.raises(ValueError):
        invariant_basis(specht_module((3, 2), 3), [9])


def test_fixed_points_matches_fixed_space():
    for lam, p, m in [((3, 2), 2, 2), ((4, 2), 2, 2), ((4, 4), 2, 2),
                      ((3, 3), 3, 3), ((4, 3, 1), 3, 3)]:
        rep = specht_module(lam, p)
        fp = fixed_points(rep, m)
        assert fp.dim == specht_fixed_space(lam, p, m)[0]
        assert fp.m == m
        assert fp.ambient is rep
        assert fp.induced.n == rep.n - m
        assert fp.induced.dim == fp.dim
        assert fp.induced.satisfies_relations()
        assert fp.induced.label.startswith("F_%d(" % m)
    with pytest.raises(ValueError):
        fixed_points(specht_module((3, 2), 3), 5)


def test_fixed_module_dim_p2():
    # the degree-8 fixed-point module of Sp(4,4) over GF(2)
    fp = fixed_points(specht_module((4, 4), 2), 2)
    assert fp.dim == 9
    clear_caches()


def test_hom_paths_agree_on_specht_pairs():
    shapes = list(partitions_of(5))
    for p in (2, 3):
        for lam in shapes:
            for mu in shapes:
                v = specht_module(lam, p)
                w = specht_module(mu, p)
                want = _hom_kron(v, w, False)[0]
                assert v.cyclic_data is not None
                got, basis = hom_space(v, w, maps=True)
                assert got == want, (lam, mu, p)
                assert len(basis) == got
                for x in basis:
                    assert x.shape == (w.dim, v.dim)
                    for av, aw in zip(v.action, w.action):
                        lhs = gfp.matmul_mod(aw, x, p)
                        rhs = gfp.matmul_mod(x, av, p)
                        assert np.array_equal(lhs, rhs)


def test_hom_paths_agree_on_induced_sources():
    for p in (2, 3):
        for mu in partitions_of(5):
            src = permutation_module(mu, p)
            for lam in partitions_of(5):
                tgt = specht_module(lam, p)
                if src.dim * tgt.dim > 4096:
                    continue
                want = _hom_kron(src, tgt, False)[0]
                got, basis = hom_space(src, tgt, maps=True)
                assert got == want, (mu, lam, p)
                for x in basis:
                    for av, aw in zip(src.action, tgt.action):
                        assert np.array_equal(gfp.matmul_mod(aw, x, p),
                                              gfp.matmul_mod(x, av, p))
    clear_caches()


def _margin_matrices(rows, cols):
    """Count nonnegative integer matrices with the given margins."""
    if not rows:
        return 1 if all(c == 0 for c in cols) else 0
    total = 0
    target = rows[0]

    def distribute(j, left, acc):
        nonlocal total
        if j == len(cols):
            if left == 0:
                total += _margin_matrices(rows[1:], tuple(acc))
            return
        for take in range(min(left, cols[j]) + 1):
            acc.append(cols[j] - take)
            distribute(j + 1, left - take, acc)
            acc.pop()

    distribute(0, target, [])
    return total


def test_hom_between_permutation_modules_counts_double_cosets():
    # the dimension is the number of integer matrices with margins, in
    # any characteristic
    shapes = list(partitions_of(5))
    for p in (2, 3):
        for mu in shapes:
            src = permutation_module(mu, p)
            for nu in shapes:
                tgt = permutation_module(nu, p)
                want = _margin_matrices(mu, nu)
                assert hom_space(src, tgt)[0] == want, (mu, nu, p)
    clear_caches()


def test_schur_orthogonality_large_p():
    assert hom_space(specht_module((3, 2), 7),
                     specht_module((3, 2), 7))[0] == 1
    assert hom_space(specht_module((3, 2), 7),
                     specht_module((2, 2, 1), 7))[0] == 0


def test_conjugate_twist_isomorphism():
    # Sp(lam') is the sign twist of the dual of Sp(lam)
    for lam, p in [((3, 2), 3), ((3, 1, 1), 2), ((4, 2), 5)]:
        v = specht_module(conjugate(lam), p)
        w = sign_twist(dual(specht_module(lam, p)))
        dim, maps = hom_space(v, w, maps=True)
        assert dim >= 1
        assert any(gfp.rank(x, p) == v.dim for x in maps)


def test_hom_known_values_p2():
    triv10 = simple_module_D((6,), 2)
    assert socle_mult(triv10, specht_module((3, 3), 2)) == 1
    assert hom_space(simple_module_D((6,), 2),
                     specht_module((2, 2, 1, 1), 2))[0] == 0
    assert hom_space(specht_module((4, 2), 2),
                     simple_module_D((6,), 2))[0] == 0
    assert head_mult(specht_module((4, 2), 2),
                     simple_module_D((4, 2), 2)) == 1


def test_head_of_specht_is_its_simple():
    for lam, p in [((3, 2), 2), ((4, 2), 3), ((4, 3, 1), 3), ((3, 3), 5)]:
        assert head_mult(specht_module(lam, p),
                         simple_module_D(lam, p)) == 1
    clear_caches()


def test_hom_space_input_checks():
    with pytest.raises(ValueError):
        hom_space(specht_module((2, 1), 3), specht_module((2, 2), 3))
    with pytest.raises(ValueError):
        hom_space(specht_module((2, 1), 3), specht_module((2, 1), 5))


def _h1_bar(v):
    """First cohomology from the full group: the cocycle identity
    z(gh) = z(g) + g z(h) over every pair, minus coboundaries."""
    n, p, d = v.n, v.p, v.dim
    gens = coxeter_generators(n)
    words = {Permutation.identity(n): ()}
    frontier = [Permutation.identity(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for i, s in enumerate(gens, start=1):
                h = g * s
                if h not in words:
                    words[h] = words[g] + (i,)
                    nxt.append(h)
        frontier = nxt
    order = sorted(words, key=lambda g: g.images)
    index = {g: k for k, g in enumerate(order)}
    mats = {}
    for g in order:
        m = np.eye(d, dtype=np.int64)
        for i in words[g]:
            m = gfp.matmul_mod(m, v.action[i - 1], p)
        mats[g] = m
    cnt = len(order)
    eye = np.eye(d, dtype=np.int64)
    rows = []
    for g in order:
        for h in order:
            gh = g * h
            block = np.zeros((d, cnt * d), dtype=np.int64)
            block[:, index[gh] * d:(index[gh] + 1) * d] += eye
            block[:, index[g] * d:(index[g] + 1) * d] -= eye
            block[:, index[h] * d:(index[h] + 1) * d] -= mats[g]
            rows.append(block % p)
    z1 = gfp.kernel_basis(np.vstack(rows), p).shape[0]
    b1 = d - invariant_basis(v).shape[0]
    return z1 - b1


def test_h1_against_bar_oracle():
    mods = []
    for p in (2, 3):
        for n in (3, 4):
            for lam in partitions_of(n):
                mods.append(specht_module(lam, p))
        mods.append(permutation_module((2, 2), p))
        mods.append(permutation_module((3, 1), p))
        mods.append(permutation_module((2, 1, 1), p))
    mods.append(simple_module_D((3, 1), 2))
    mods.append(simple_module_D((2, 2), 3))
    mods.append(sign_twist(specht_module((2, 2), 3)))
    for v in mods:
        assert h1_dimension(v) == _h1_bar(v), v.label
    # away from the modulus everything is semisimple
    for lam in partitions_of(4):
        v = specht_module(lam, 5)
        assert h1_dimension(v) == 0
        assert _h1_bar(v) == 0
    clear_caches()


def test_h1_anchors():
    assert h1_dimension(specht_module((1, 1, 1), 3)) == 1
    assert h1_dimension(specht_module((3, 1, 1), 5)) == 1
    assert h1_dimension(simple_module_D((5,), 5)) == 0


def test_h1_degenerate_and_cap():
    triv = ModuleRep(1, 3, [], "point", dim=1)
    assert h1_dimension(triv) == 0
    eye = np.eye(100, dtype=np.int64)
    big = ModuleRep(42, 3, [eye] * 41, "fat identity")
    with pytest.raises(ValueError):
        h1_dimension(big)


def test_reciprocity_instance():
    # Hom(M(nu), Sp(lam)) against invariants of the induced fixed-point
    # module, nu the two-part shape (max(m, r-m), min(m, r-m))
    for lam, p, m in [((4, 2), 3, 2), ((3, 3), 2, 2), ((4, 3, 1), 3, 4)]:
        r = sum(lam)
        nu = tuple(sorted((m, r - m), reverse=True))
        lhs = hom_space(permutation_module(nu, p),
                        specht_module(lam, p))[0]
        fp = fixed_points(specht_module(lam, p), m)
        rhs = invariant_basis(fp.induced).shape[0]
        assert lhs == rhs, (lam, p, m)
    clear_caches()
