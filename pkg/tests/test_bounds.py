"""Sufficiency thresholds and growth sanity checks."""

import numpy as np
import pytest

import coopcolor as cc


def test_general_bounds_small_degrees():
    assert cc.general_bounds(1) == (2, 2)
    assert cc.general_bounds(2) == (4, 4)
    assert cc.general_bounds(3) == (5, 6)
    assert cc.general_bounds(4) == (6, 8)
    with pytest.raises(ValueError):
        cc.general_bounds(0)


def test_general_bounds_ordered_and_monotone():
    prev = (0, 0)
    for d in range(1, 200):
        lo, hi = cc.general_bounds(d)
        assert lo <= hi
        assert (lo, hi) >= prev
        prev = (lo, hi)


def test_tree_bounds_values():
    assert cc.tree_bounds(2) == (0.0, 19)
    assert cc.tree_bounds(4) == (1.0, 22)
    assert cc.tree_bounds(16) == (2.0, 27)
    with pytest.raises(ValueError):
        cc.tree_bounds(1)
    for d in (2, 5, 50, 1000):
        lo, hi = cc.tree_bounds(d)
        assert lo <= hi


def test_bipartite_bounds_values():
    lo, need, m = cc.bipartite_bounds(2)
    assert lo == 1.0
    assert need == pytest.approx(6.34785817991144)
    assert m is None

    lo4, need4, m4 = cc.bipartite_bounds(10**4, eps=0.1)
    assert lo4 == pytest.approx(13.287712379549449)
    assert need4 == pytest.approx(2388.6196504678846)
    # at this degree and slack no m up to 2d satisfies all three
    # conditions; a larger slack admits one
    assert m4 is None
    assert cc.bipartite_bounds(10**4, eps=0.7)[2] == 16632

    with pytest.raises(ValueError):
        cc.bipartite_bounds(1)
    with pytest.raises(ValueError):
        cc.bipartite_bounds(4, eps=-0.2)


def test_sufficient_m_really_is_sufficient():
    m = cc.bipartite_bounds(10**4, eps=0.7)[2]
    assert cc.lll_condition_bipartite(m, 10**4, eps=0.7)[0]
    assert not cc.lll_condition_bipartite(m - 1, 10**4, eps=0.7)[0]


def test_q_growth_check_range():
    for m in (2, 3, 4, 5):
        assert cc.q_growth_check(m)
    with pytest.raises(ValueError):
        cc.q_growth_check(1)
    with pytest.raises(ValueError):
        cc.q_growth_check(6)


def test_asymptotic_threshold_power_of_two():
    assert cc.bipartite_asymptotic_threshold(0.1) == 2**173
    # more slack means the threshold cannot move later
    assert cc.bipartite_asymptotic_threshold(0.05) >= 2**173


def test_doubly_log_lower_bounds_monotone():
    ds = np.unique(np.logspace(1, 6, 40, dtype=np.int64))
    tree_lower = [cc.tree_bounds(int(d))[0] for d in ds]
    assert all(b >= a for a, b in zip(tree_lower, tree_lower[1:]))
    # the bipartite scan walks m up to 2d, so sample small degrees only
    bip_lower = [cc.bipartite_bounds(d)[0] for d in (2, 16, 256, 1024)]
    assert bip_lower == sorted(bip_lower)
