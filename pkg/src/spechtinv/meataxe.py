"""Composition factors by the meataxe, with simple-module identification.

The chopper draws seeded random algebra elements, finds kernel vectors of
irreducible factors of an annihilator polynomial, spins them, and applies
Norton's criterion (kernel vector spins to everything and a dual kernel
vector spins to everything in the dual) to certify irreducibility.
"""

import json

import numpy as np
from sympy import GF, Poly, symbols

from . import gfp
from .gfp import matmul_mod
from .homological import hom_space
from .modules import ModuleRep, gram_form, simple_module_D
from .partitions import format_partition, is_p_regular, partitions_of

CHOP_WORD_COUNT = 4
CHOP_WORD_LEN = 4
CHOP_BUDGET = 200
NORTON_DEG_CAP = 24

_X = symbols("x")
_simple_dims = {}


class ChopError(RuntimeError):
    """Raised when the trial budget runs out before a split or certificate."""


class CompositionFactorList:
    """Identified factors of a chopped module plus any unidentified dims."""

    __slots__ = ("module_label", "dim", "factors", "residual", "seed")

    def __init__(self, module_label, dim, factors, residual, seed):
        self.module_label = module_label
        self.dim = dim
        self.factors = sorted(factors, key=lambda t: (-t[1], t[0]))
        self.residual = sorted(residual, reverse=True)
        self.seed = seed
        total = sum(d * m for _, d, m in self.factors) + sum(self.residual)
        if total != dim:
            raise ValueError("factor dims sum to %d, expected %d"
                             % (total, dim))

    def multiset(self):
        """Factors as a dict {partition: multiplicity} for comparisons."""
        return {mu: m for mu, _, m in self.factors}

    def to_json(self):
        payload = {
            "module": self.module_label,
            "seed": self.seed,
            "factors": [{"label": format_partition(mu), "dim": d, "mult": m}
                        for mu, d, m in self.factors],
            "residual": list(self.residual),
        }
        return json.dumps(payload)

    def __repr__(self):
        inner = ", ".join("D(%s):%d" % (format_partition(mu), m)
                          for mu, _, m in self.factors)
        if self.residual:
            inner += ", residual %r" % (self.residual,)
        return "CompositionFactorList(%s)" % inner


def _random_element(v, rng):
    """A random element of the group algebra as a matrix on v."""
    p = v.p
    eye = np.eye(v.dim, dtype=np.int64)
    z = np.zeros((v.dim, v.dim), dtype=np.int64)
    for _ in range(CHOP_WORD_COUNT):
        ln = int(rng.integers(1, CHOP_WORD_LEN + 1))
        coef = int(rng.integers(1, p))
        mat = eye
        for i in rng.integers(1, v.n, size=ln):
            mat = matmul_mod(mat, v.action[int(i) - 1], p)
        z = (z + coef * mat) % p
    return z


def _spin(action, p, seed_rows):
    """Row basis of the smallest invariant subspace containing the rows."""
    basis, piv = gfp.rref(seed_rows % p, p)
    basis = basis[:len(piv)]
    while True:
        blocks = [basis]
        for a in action:
            blocks.append(matmul_mod(basis, np.ascontiguousarray(a.T), p))
        nxt, piv = gfp.rref(np.vstack(blocks), p)
        nxt = nxt[:len(piv)]
        if nxt.shape[0] == basis.shape[0]:
            return nxt
        basis = nxt


def _vector_annihilator(z, vec, p):
    """Monic annihilator of vec under z, plus the Krylov vectors.

    Returns (coeffs ascending, krylov) where sum coeffs[j] z^j vec = 0 and
    krylov[j] = z^j vec for j below the degree.
    """
    rows, pivs, combos, krylov = [], [], [], []
    x = vec % p
    step = 0
    while True:
        r = x.copy()
        c = np.zeros(step + 1, dtype=np.int64)
        c[step] = 1
        for row, pc, cc in zip(rows, pivs, combos):
            f = int(r[pc])
            if f:
                r = (r - f * row) % p
                c[:len(cc)] = (c[:len(cc)] - f * cc) % p
        nz = np.flatnonzero(r)
        if len(nz) == 0:
            return c, krylov
        pc = int(nz[0])
        inv = pow(int(r[pc]), p - 2, p)
        rows.append(inv * r % p)
        pivs.append(pc)
        combos.append(inv * c % p)
        krylov.append(x)
        x = matmul_mod(z, x[:, None], p)[:, 0]
        step += 1


def _poly_div(a, b, p):
    """Quotient of polynomial a by b (exact division, ascending coeffs)."""
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    inv = pow(int(b[-1]), p - 2, p)
    out = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        q = a[db + k] * inv % p
        out[k] = q
        for j in range(db + 1):
            a[k + j] = (a[k + j] - q * b[j]) % p
    assert not any(a), "division was not exact"
    return out


def _poly_factors(coeffs, p):
    """Irreducible factors (ascending coeffs, multiplicity), low degree first."""
    poly = Poly(list(reversed([int(c) for c in coeffs])), _X, domain=GF(p))
    out = []
    for fac, mult in poly.factor_list()[1]:
        cs = [int(c) % p for c in reversed(fac.all_coeffs())]
        out.append((cs, mult))
    out.sort(key=lambda t: len(t[0]))
    return out


def _poly_matrix(z, coeffs, p):
    """Evaluate a polynomial at the matrix z by Horner."""
    d = z.shape[0]
    eye = np.eye(d, dtype=np.int64)
    out = coeffs[-1] % p * eye
    for c in reversed(coeffs[:-1]):
        out = (matmul_mod(out, z, p) + c % p * eye) % p
    return out


def _try_split(v, rng):
    """One meataxe trial: a proper submodule basis, 'irreducible', or None."""
    p, d = v.p, v.dim
    z = _random_element(v, rng)
    vec = rng.integers(0, p, size=d).astype(np.int64)
    if not vec.any():
        return None
    ann, krylov = _vector_annihilator(z, vec, p)
    if len(ann) <= 1:
        return None
    for fac, _ in _poly_factors(ann, p):
        quot = _poly_div(ann, fac, p)
        w = np.zeros(d, dtype=np.int64)
        for j, c in enumerate(quot):
            if c:
                w = (w + c * krylov[j]) % p
        assert w.any()
        sub = _spin(v.action, p, w[None, :])
        if sub.shape[0] < d:
            return sub
        if len(fac) - 1 > NORTON_DEG_CAP:
            continue
        fz = _poly_matrix(z, fac, p)
        if d - gfp.rank(fz, p) != len(fac) - 1:
            continue
        wd = gfp.kernel_basis(np.ascontiguousarray(fz.T), p)[0]
        dual_action = [np.ascontiguousarray(a.T) for a in v.action]
        dsub = _spin(dual_action, p, wd[None, :])
        if dsub.shape[0] == d:
            return "irreducible"
        perp = gfp.kernel_basis(dsub, p)
        assert 0 < perp.shape[0] < d
        return perp
    return None


def _sub_quotient(v, rows):
    """Split v along an invariant row space into sub and quotient reps."""
    p = v.p
    reduced, piv = gfp.rref(rows, p)
    reduced = reduced[:len(piv)]
    piv = list(piv)
    keep = [c for c in range(v.dim) if c not in set(piv)]
    bt = np.ascontiguousarray(reduced.T)
    sub_action, quo_action = [], []
    for a in v.action:
        x = gfp.solve(bt, matmul_mod(a, bt, p), p)
        assert x is not None
        sub_action.append(np.ascontiguousarray(x))
        aq = a[:, keep]
        quo = (aq[keep, :] - reduced[:, keep].T @ aq[piv, :]) % p
        quo_action.append(quo)
    sub = ModuleRep(v.n, p, sub_action, "sub of " + v.label)
    quo = ModuleRep(v.n, p, quo_action, "quo of " + v.label,
                    dim=len(keep))
    return sub, quo


def _simple_dim(mu, p):
    if (mu, p) not in _simple_dims:
        _simple_dims[(mu, p)] = gram_form(mu, p).rank()
    return _simple_dims[(mu, p)]


def identify_simple(factor):
    """Match an irreducible factor against the simple modules D^mu.

    Returns the p-regular partition mu with dim D^mu equal to the factor
    dimension and a nonzero Hom from D^mu, or None if nothing matches.
    """
    for mu in partitions_of(factor.n):
        if not is_p_regular(mu, factor.p):
            continue
        if _simple_dim(mu, factor.p) != factor.dim:
            continue
        if hom_space(simple_module_D(mu, factor.p), factor)[0]:
            return mu
    return None


def chop(v, seed=0, budget=CHOP_BUDGET):
    """Full composition factor multiset of v by recursive meataxe splits."""
    if v.dim < 1:
        raise ValueError("chop needs a nonzero module")
    rng = np.random.default_rng(seed)
    pending = [v]
    leaves = []
    while pending:
        cur = pending.pop()
        if cur.dim == 1:
            leaves.append(cur)
            continue
        outcome = None
        for _ in range(budget):
            outcome = _try_split(cur, rng)
            if outcome is not None:
                break
        if outcome is None:
            raise ChopError("no split or certificate for %s within %d "
                            "trials" % (cur.label, budget))
        if isinstance(outcome, str):
            leaves.append(cur)
        else:
            sub, quo = _sub_quotient(cur, outcome)
            pending.append(quo)
            pending.append(sub)
    counts = {}
    residual = []
    for leaf in leaves:
        mu = identify_simple(leaf)
        if mu is None:
            residual.append(leaf.dim)
        else:
            key = (mu, leaf.dim)
            counts[key] = counts.get(key, 0) + 1
    factors = [(mu, d, m) for (mu, d), m in counts.items()]
    return CompositionFactorList(v.label, v.dim, factors, residual, seed)
