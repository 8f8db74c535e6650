import json

import pytest

from spechtinv.modules import clear_caches, gram_form, specht_module
from spechtinv.meataxe import CompositionFactorList, chop


def test_chop_semisimple_large_p():
    out = chop(specht_module((3, 1), 5))
    assert out.factors == [((3, 1), 3, 1)]
    assert out.residual == []
    out = chop(specht_module((2, 2), 7))
    assert out.factors == [((2, 2), 2, 1)]


def test_chop_sp42_p2():
    out = chop(specht_module((4, 2), 2))
    assert out.factors == [((4, 2), 4, 1), ((5, 1), 4, 1), ((6,), 1, 1)]
    assert out.residual == []
    assert out.dim == 9


def test_chop_sp33_p2():
    out = chop(specht_module((3, 3), 2))
    assert out.multiset() == {(4, 2): 1, (6,): 1}
    assert sum(d * m for _, d, m in out.factors) == 5


def test_chop_sp44_p3():
    out = chop(specht_module((4, 4), 3))
    assert out.factors == [((6, 2), 13, 1), ((4, 4), 1, 1)]


def test_chop_sp431_p3():
    out = chop(specht_module((4, 3, 1), 3))
    assert out.factors == [((5, 2, 1), 35, 1), ((5, 3), 28, 1),
                           ((4, 3, 1), 7, 1)]
    clear_caches()


def test_chop_sp63_p3():
    out = chop(specht_module((6, 3), 3))
    assert out.factors == [((6, 3), 41, 1), ((8, 1), 7, 1)]
    clear_caches()


def test_factor_dims_match_gram_ranks():
    for lam, p in [((4, 2), 2), ((4, 4), 3), ((4, 3, 1), 3)]:
        out = chop(specht_module(lam, p))
        for mu, dim, _ in out.factors:
            assert gram_form(mu, p).rank() == dim
    clear_caches()


def test_chop_seed_stability():
    base = chop(specht_module((4, 2), 2), seed=0).multiset()
    for seed in range(1, 5):
        assert chop(specht_module((4, 2), 2), seed=seed).multiset() == base
    base = chop(specht_module((4, 4), 3), seed=0).multiset()
    for seed in range(1, 5):
        assert chop(specht_module((4, 4), 3), seed=seed).multiset() == base


def test_to_json():
    out = chop(specht_module((3, 3), 2), seed=2)
    payload = json.loads(out.to_json())
    assert payload["seed"] == 2
    assert payload["residual"] == []
    labels = {f["label"]: (f["dim"], f["mult"]) for f in payload["factors"]}
    assert labels == {"4,2": (4, 1), "6": (1, 1)}
    assert "D(4,2):1" in repr(out)


def test_factor_list_invariant():
    with pytest.raises(ValueError):
        CompositionFactorList("x", 10, [((2, 1), 2, 1)], [], 0)
    ok = CompositionFactorList("x", 7, [((2, 1), 2, 2)], [3], 0)
    assert ok.residual == [3]
    assert ok.multiset() == {(2, 1): 2}
