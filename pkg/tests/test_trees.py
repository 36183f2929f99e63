"""Marking process on forests: laws, resampling, sufficiency condition."""

import itertools

import numpy as np
import pytest

import coopcolor as cc
from coopcolor.kernels import membership_matrix
from coopcolor.trees import MarkMatrix, forest_parents, tree_condition_value


def _path4():
    return cc.build_system(4, [[(0, 1), (1, 2), (2, 3)]], roots=[[0]])


def test_sample_marks_shape_and_determinism():
    s = cc.random_forest_system(20, 3, 2, seed=1)
    a = cc.sample_marks(s, seed=42)
    b = cc.sample_marks(s, seed=42)
    assert a.bits.shape == (3, 20)
    assert a.bits.dtype == np.bool_
    assert np.array_equal(a.bits, b.bits)
    assert not np.array_equal(a.bits, cc.sample_marks(s, seed=43).bits)


def test_sample_marks_are_fair_coins():
    s = cc.build_system(1000, [[] for _ in range(100)])
    bits = cc.sample_marks(s, seed=7).bits
    assert abs(bits.mean() - 0.5) < 0.01


def test_derived_set_worked_examples():
    s = _path4()
    marked = np.zeros((1, 4), dtype=bool)
    marked[0, [0, 1, 3]] = True
    assert cc.independent_from_marks(s, 0, MarkMatrix(marked)) == [0, 3]

    assert cc.independent_from_marks(s, 0, MarkMatrix(np.zeros((1, 4), bool))) == []
    assert cc.independent_from_marks(s, 0, MarkMatrix(np.ones((1, 4), bool))) == [0]

    high_root = cc.build_system(4, [[(0, 1), (1, 2), (2, 3)]], roots=[[3]])
    assert cc.independent_from_marks(high_root, 0, MarkMatrix(np.ones((1, 4), bool))) == [3]


def test_derived_sets_are_always_independent():
    rng = np.random.default_rng(314)
    checks = 0
    for trial in range(10):
        s = cc.random_forest_system(15, 2, 3, seed=trial)
        for rep in range(10):
            marks = cc.sample_marks(s, seed=rng)
            for i in range(s.m):
                derived = cc.independent_from_marks(s, i, marks)
                assert cc.is_independent(s, i, derived)
                checks += 1
    assert checks == 200


def test_membership_law_exact_by_enumeration():
    # root: in the derived set iff its own coin is heads (2 cases of 2)
    s = _path4()
    parents = forest_parents(s)
    root_hits = 0
    for own in (False, True):
        bits = np.zeros((1, 4), bool)
        bits[0, 0] = own
        root_hits += 0 in cc.independent_from_marks(s, 0, MarkMatrix(bits))
    assert root_hits == 1

    # non-root: heads with parent tails (1 case of 4)
    inner_hits = 0
    for own, par in itertools.product((False, True), repeat=2):
        bits = np.zeros((1, 4), bool)
        bits[0, 2] = own
        bits[0, 1] = par
        inner_hits += 2 in cc.independent_from_marks(s, 0, MarkMatrix(bits))
    assert inner_hits == 1
    assert parents[0, 2] == 1 and parents[0, 0] == -1


def test_membership_law_monte_carlo():
    s = cc.random_forest_system(12, 2, 3, seed=9)
    parents = forest_parents(s)
    trials = 100_000
    rng = np.random.default_rng(2718)
    bits = rng.integers(0, 2, size=(trials, s.m, s.n)).astype(bool)
    member = membership_matrix(bits, parents[None])
    rate = member.mean(axis=0)
    expected = np.where(parents < 0, 0.5, 0.25)
    assert np.abs(rate - expected).max() < 0.01

    # chance that a vertex is covered by no derived set
    uncovered = ~member.any(axis=1)
    bound = 0.75**s.m
    sigma = (bound * (1 - bound) / trials) ** 0.5
    assert uncovered.mean(axis=0).max() <= bound + 3 * sigma


def test_batched_membership_matches_per_row():
    s = cc.random_forest_system(10, 3, 2, seed=4)
    parents = forest_parents(s)
    rng = np.random.default_rng(0)
    bits = rng.integers(0, 2, size=(50, s.m, s.n)).astype(bool)
    batched = membership_matrix(bits, parents[None])
    for t in range(50):
        assert np.array_equal(batched[t], membership_matrix(bits[t], parents))


def test_event_dependency_degree_is_bounded():
    # the event at v reads marks (i, v) and (i, parent_i(v)); two events
    # conflict when they share a mark, and each event must conflict with
    # at most 2*d*m others
    for seed, d in ((0, 2), (1, 3)):
        s = cc.random_forest_system(40, 3, d, seed=seed)
        parents = forest_parents(s)
        reads = []
        for v in range(s.n):
            vars_v = set()
            for i in range(s.m):
                vars_v.add((i, v))
                if parents[i, v] >= 0:
                    vars_v.add((i, int(parents[i, v])))
            reads.append(vars_v)
        cap = 2 * d * s.m
        for v in range(s.n):
            conflicts = sum(
                1 for u in range(s.n) if u != v and reads[v] & reads[u]
            )
            assert conflicts <= cap


def test_solve_trees_deterministic_and_verified():
    s = cc.random_forest_system(200, 19, 2, seed=21)
    report1, stats1 = cc.solve_trees(s, seed=5)
    report2, stats2 = cc.solve_trees(s, seed=5)
    assert report1.outcome == cc.COLORABLE
    assert report1.coloring == report2.coloring
    assert stats1.rounds == stats2.rounds == stats1.resampled_events
    assert int(stats1.per_vertex.sum()) == stats1.rounds
    check = cc.verify_coloring(s, report1.coloring)
    assert check.valid
    # every assigned index is the lowest derived set covering the vertex
    assert all(0 <= g < s.m for g in report1.coloring.assignment)


def test_solve_trees_single_vertex():
    s = cc.build_system(1, [[]], roots=[[0]])
    report, stats = cc.solve_trees(s, seed=0)
    assert report.outcome == cc.COLORABLE
    assert report.coloring.assignment == (0,)
    assert stats.rounds >= 0


def test_solve_trees_round_cap_on_impossible_instance():
    s = cc.build_system(2, [[(0, 1)]])
    report, stats = cc.solve_trees(s, seed=1, max_rounds=50)
    assert report.outcome == cc.BUDGET_EXCEEDED
    assert report.coloring is None
    assert stats.rounds == 50
    assert report.nodes_expanded == 50


def test_solve_trees_no_graphs():
    s = cc.build_system(3, [])
    report, stats = cc.solve_trees(s, seed=0)
    assert report.outcome == cc.BUDGET_EXCEEDED
    assert stats.rounds == 0


def test_solve_trees_rejects_cycles():
    s = cc.build_system(3, [[(0, 1), (1, 2), (0, 2)]])
    with pytest.raises(cc.NotAForest):
        cc.solve_trees(s, seed=0)


def test_condition_value_frozen_points():
    assert float(tree_condition_value(19, 2)) == pytest.approx(0.8735184424967272)
    assert float(tree_condition_value(18, 2)) == pytest.approx(1.103391716837971)
    assert float(tree_condition_value(1, 1)) == pytest.approx(4.077422742688568)
    assert cc.lll_condition_tree(19, 2) is True
    assert cc.lll_condition_tree(18, 2) is False
    assert cc.lll_condition_tree(1, 1) is False
    with pytest.raises(ValueError):
        tree_condition_value(0, 2)
    with pytest.raises(ValueError):
        tree_condition_value(2, 0)


def test_min_m_tree_values_and_growth():
    assert cc.min_m_tree(2) == 19
    assert cc.min_m_tree(10**6) == 69
    # doubly logarithmic growth: tiny increments across huge d ranges
    samples = [cc.min_m_tree(d) for d in (2, 8, 64, 4096, 10**6)]
    assert samples == sorted(samples)
    assert samples[-1] - samples[0] < 60
    with pytest.raises(ValueError):
        cc.min_m_tree(0)
