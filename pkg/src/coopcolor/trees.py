"""Randomized solver for systems of forests.

Each forest marks every vertex with an independent fair coin; the
derived set of a forest keeps the marked vertices whose parent is
unmarked (roots always qualify), which is independent by construction.
A vertex covered by no derived set is a bad event; the solver resamples
exactly the coins that event reads (the vertex's own marks and its
parents' marks) until every vertex is covered or a round cap trips.
"""

import time
from dataclasses import dataclass

import mpmath
import numpy as np

from . import kernels
from .exact import BUDGET_EXCEEDED, COLORABLE, SolveReport
from .system import (
    CoopColorError,
    CooperativeColoring,
    CycleDetected,
    GraphSystem,
    NotAForest,
    root_forest,
    verify_coloring,
)

DEFAULT_ROUND_FACTOR = 1000


@dataclass
class MarkMatrix:
    """Boolean mark bits, one row per graph, one column per vertex."""

    bits: np.ndarray


@dataclass
class ResampleStats:
    """Instrumentation for a resampling run.

    rounds and resampled_events coincide here because every round
    resamples exactly one bad event; both are kept so reports stay
    meaningful if a batched variant ever changes that.
    """

    rounds: int
    resampled_events: int
    per_vertex: np.ndarray


def forest_parents(s: GraphSystem) -> np.ndarray:
    """(m, n) parent matrix, -1 at roots; cached on the system.

    Components are rooted at their lowest-index vertex unless the
    graph's roots annotation says otherwise.  Raises NotAForest when
    any graph contains a cycle.
    """
    if "forest_parents" not in s._cache:
        rows = []
        for i in range(s.m):
            try:
                parents, _ = root_forest(s, i, preferred_roots=s.roots[i])
            except CycleDetected as exc:
                raise NotAForest(str(exc)) from exc
            rows.append(parents)
        s._cache["forest_parents"] = np.asarray(rows, dtype=np.int64).reshape(s.m, s.n)
    return s._cache["forest_parents"]


def sample_marks(s: GraphSystem, seed) -> MarkMatrix:
    """Independent fair-coin marks for every (graph, vertex) pair.

    ``seed`` is anything numpy's default_rng accepts, including an
    existing Generator (used by the solver to keep one stream).
    """
    rng = np.random.default_rng(seed)
    bits = rng.integers(0, 2, size=(s.m, s.n), dtype=np.uint8).astype(np.bool_)
    return MarkMatrix(bits=bits)


def independent_from_marks(s: GraphSystem, i: int, marks: MarkMatrix) -> list:
    """The derived independent set of graph i: marked vertices whose
    parent is unmarked, plus marked roots.  Sorted vertex list."""
    parents = forest_parents(s)[i]
    row = np.asarray(marks.bits[i], dtype=np.bool_)
    member = kernels.membership_matrix(row, parents)
    return [int(v) for v in np.flatnonzero(member)]


def _assignment_from_marks(bits, parents):
    member = kernels.membership_matrix(bits, parents)
    return member.argmax(axis=0)


def solve_trees(s: GraphSystem, seed=0, max_rounds: int | None = None):
    """Run the marking process with resampling; returns (report, stats).

    Each round locates the lowest-index uncovered vertex and redraws the
    coins that decide its coverage.  Success assigns every vertex its
    lowest covering graph and verifies before returning; exceeding
    max_rounds (default 1000 * n) is reported as BUDGET_EXCEEDED, never
    raised.  Deterministic given the seed.
    """
    start = time.perf_counter()
    parents = forest_parents(s)
    if max_rounds is None:
        max_rounds = DEFAULT_ROUND_FACTOR * s.n
    hist = np.zeros(s.n, dtype=np.int64)
    if s.m == 0 and s.n > 0:
        # no coins exist, so no vertex can ever be covered
        stats = ResampleStats(rounds=0, resampled_events=0, per_vertex=hist)
        return SolveReport(BUDGET_EXCEEDED, None, 0, time.perf_counter() - start), stats

    rng = np.random.default_rng(seed)
    bits = sample_marks(s, rng).bits
    rounds = 0
    while True:
        v = int(kernels.first_uncovered(bits, parents)) if s.n else -1
        if v < 0:
            assignment = _assignment_from_marks(bits, parents)
            coloring = CooperativeColoring(tuple(int(j) for j in assignment))
            report = verify_coloring(s, coloring)
            if not report.valid:
                raise CoopColorError(
                    f"internal error: marking process produced an invalid coloring "
                    f"({report.violations}, {report.uncovered})"
                )
            stats = ResampleStats(rounds=rounds, resampled_events=rounds, per_vertex=hist)
            return (
                SolveReport(COLORABLE, coloring, rounds, time.perf_counter() - start),
                stats,
            )
        if rounds >= max_rounds:
            stats = ResampleStats(rounds=rounds, resampled_events=rounds, per_vertex=hist)
            return SolveReport(BUDGET_EXCEEDED, None, rounds, time.perf_counter() - start), stats
        rounds += 1
        hist[v] += 1
        targets = []
        for i in range(s.m):
            targets.append((i, v))
            p = int(parents[i, v])
            if p >= 0:
                targets.append((i, p))
        fresh = rng.integers(0, 2, size=len(targets), dtype=np.uint8)
        for (i, u), bit in zip(targets, fresh):
            bits[i, u] = bool(bit)


def tree_condition_value(m: int, d: int):
    """(3/4)^m * m * 2d * e, evaluated in extended precision."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    with mpmath.workdps(60):
        return mpmath.mpf("0.75") ** m * m * (2 * d) * mpmath.e


def lll_condition_tree(m: int, d: int) -> bool:
    """True iff the symmetric local-lemma condition for the marking
    process holds: (3/4)^m * m * 2d * e <= 1."""
    return tree_condition_value(m, d) <= 1


def min_m_tree(d: int) -> int:
    """Least number of forests for which the condition above holds."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    m = 1
    while not lll_condition_tree(m, d):
        m += 1
    return m
