"""Exact decision procedure for cooperative colorability.

Backtracking over per-vertex graph choices in index order, colors tried
ascending.  The admissibility check is edge-local: color j is allowed at
v iff no already-colored neighbor of v in graph j holds j, which is a
complete pruning rule because independence is a pairwise property.  The
search runs in slices so wall-clock deadlines and node budgets can be
enforced without recursion or callbacks.
"""

import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .system import (
    CoopColorError,
    CooperativeColoring,
    GraphSystem,
    lower_neighbor_csr,
    verify_coloring,
)

COLORABLE = "colorable"
UNCOLORABLE = "uncolorable"
BUDGET_EXCEEDED = "budget_exceeded"

DEFAULT_NODE_BUDGET = 10**9

# nodes per kernel slice; deadline checks happen between slices
_SLICE = 1 << 22


@dataclass(frozen=True)
class SearchBudget:
    """Caps on one exact-solver call: node count and optional wall time."""

    max_nodes: int = DEFAULT_NODE_BUDGET
    deadline: float | None = None

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError(f"max_nodes must be >= 1, got {self.max_nodes}")
        if self.deadline is not None and self.deadline < 0:
            raise ValueError(f"deadline must be >= 0, got {self.deadline}")


@dataclass
class SolveReport:
    """Outcome of a solver call.

    ``coloring`` is present exactly when outcome == COLORABLE and has
    already passed the verifier.  ``nodes_expanded`` counts color
    placements for the exact solver and resampling rounds for the
    randomized solvers.
    """

    outcome: str
    coloring: CooperativeColoring | None
    nodes_expanded: int
    elapsed: float


def _certified(s: GraphSystem, color) -> CooperativeColoring:
    coloring = CooperativeColoring(tuple(int(j) for j in color))
    report = verify_coloring(s, coloring)
    if not report.valid:
        raise CoopColorError(
            f"internal error: search produced an invalid coloring ({report.violations}, "
            f"{report.uncovered})"
        )
    return coloring


def decide_colorable(s: GraphSystem, budget: SearchBudget | None = None) -> SolveReport:
    """Decide whether the system has a cooperative coloring.

    Returns COLORABLE with a verified coloring, UNCOLORABLE only after
    the whole pruned tree is exhausted, or BUDGET_EXCEEDED once the node
    budget or deadline trips.  Deterministic for identical inputs and
    budgets.
    """
    if budget is None:
        budget = SearchBudget()
    start = time.perf_counter()
    if s.n == 0:
        return SolveReport(COLORABLE, _certified(s, ()), 0, time.perf_counter() - start)

    nbr_ptr, nbr_idx = lower_neighbor_csr(s)
    color = np.full(s.n, -1, dtype=np.int64)
    state = np.array([0, 0], dtype=np.int64)
    out = np.empty((1, s.n), dtype=np.int64)
    nodes = 0
    while True:
        slice_limit = min(_SLICE, budget.max_nodes - nodes)
        status, step_nodes, _ = kernels.dfs_step(
            nbr_ptr, nbr_idx, s.n, s.m, color, state, slice_limit, out, False
        )
        nodes += int(step_nodes)
        elapsed = time.perf_counter() - start
        if status == kernels.FOUND:
            return SolveReport(COLORABLE, _certified(s, color), nodes, elapsed)
        if status == kernels.EXHAUSTED:
            return SolveReport(UNCOLORABLE, None, nodes, elapsed)
        over_deadline = budget.deadline is not None and elapsed >= budget.deadline
        if nodes >= budget.max_nodes or over_deadline:
            return SolveReport(BUDGET_EXCEEDED, None, nodes, elapsed)


def enumerate_colorings(s: GraphSystem, cap: int) -> list:
    """All valid colorings in lexicographic assignment order, up to cap.

    Intended as an oracle on small systems (roughly m**n <= 1e8); there
    is no node budget, the search simply runs to exhaustion or cap.
    """
    if cap < 0:
        raise ValueError(f"cap must be >= 0, got {cap}")
    if cap == 0:
        return []
    if s.n == 0:
        return [CooperativeColoring(())]

    nbr_ptr, nbr_idx = lower_neighbor_csr(s)
    color = np.full(s.n, -1, dtype=np.int64)
    state = np.array([0, 0], dtype=np.int64)
    buf = np.empty((min(cap, 4096), s.n), dtype=np.int64)
    results: list = []
    while True:
        status, _, found = kernels.dfs_step(
            nbr_ptr, nbr_idx, s.n, s.m, color, state, _SLICE, buf, True
        )
        for r in range(int(found)):
            results.append(CooperativeColoring(tuple(int(j) for j in buf[r])))
            if len(results) >= cap:
                return results
        if status == kernels.EXHAUSTED:
            return results
