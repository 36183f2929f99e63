"""Semi-random solver for systems of bipartite graphs.

Every graph carries a bipartition (left, right).  Vertices sitting on
the left side in at least half the graphs form the left-heavy pool; each
draws one of its left-side graphs uniformly.  The remaining right-heavy
vertices are processed greedily in ascending order, each taking the
smallest right-side graph index not blocked by a neighbor's draw.  A
right-heavy vertex with no admissible index is a bad event; the solver
redraws the choices that event reads and repeats the greedy pass.
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
    GraphSystem,
    MissingBipartition,
    neighbor_csr,
    verify_coloring,
)
from .trees import ResampleStats


class EmptyChoiceSet(CoopColorError):
    pass


@dataclass
class SideProfile:
    """Side memberships and the left-heavy / right-heavy split.

    left_of[v] lists the graphs whose bipartition puts v on the left
    (ascending); right_of[v] is the complement.  left_heavy holds the
    vertices with left memberships in at least half the graphs (ties
    included), right_heavy the rest; both sorted.
    """

    left_of: list
    right_of: list
    left_heavy: list
    right_heavy: list


def side_profile(s: GraphSystem) -> SideProfile:
    """Build the SideProfile from the system's bipartition annotations.

    Raises MissingBipartition when any graph lacks an annotation; the
    annotation is authoritative, sides are never recomputed here.
    """
    for j in range(s.m):
        if s.lefts[j] is None:
            raise MissingBipartition(f"graph {j} carries no bipartition annotation")
    left_of = [[] for _ in range(s.n)]
    right_of = [[] for _ in range(s.n)]
    for j in range(s.m):
        side = set(s.lefts[j])
        for v in range(s.n):
            (left_of[v] if v in side else right_of[v]).append(j)
    left_heavy = [v for v in range(s.n) if 2 * len(left_of[v]) >= s.m]
    right_heavy = [v for v in range(s.n) if 2 * len(left_of[v]) < s.m]
    return SideProfile(
        left_of=left_of, right_of=right_of, left_heavy=left_heavy, right_heavy=right_heavy
    )


def assign_left_heavy(profile: SideProfile, seed) -> dict:
    """Uniform independent draw of one left-side graph per left-heavy
    vertex.  Returns {vertex: graph index}; reproducible from the seed.
    ``seed`` may be an existing Generator (the solver passes one)."""
    rng = np.random.default_rng(seed)
    amap = {}
    for a in profile.left_heavy:
        options = profile.left_of[a]
        if not options:
            raise EmptyChoiceSet(f"left-heavy vertex {a} has no left-side graph")
        amap[a] = options[int(rng.integers(len(options)))]
    return amap


def admissible_right_indices(s: GraphSystem, profile: SideProfile, amap: dict, b: int) -> list:
    """Right-side graph indices of b not blocked by any neighbor's draw.

    Index j is blocked iff some neighbor of b in graph j drew j.  Only
    left-heavy vertices hold draws, so right-heavy neighbors never
    block.  Ascending list.
    """
    out = []
    for j in profile.right_of[b]:
        if not any(amap.get(a) == j for a in s.adj[j][b]):
            out.append(j)
    return out


def greedy_right_pass(s: GraphSystem, profile: SideProfile, amap: dict):
    """One greedy pass over right-heavy vertices in ascending order.

    Each vertex takes its smallest admissible right-side index.  Returns
    (assignment dict covering all vertices, -1) on success, or
    (None, b) for the first vertex b with no admissible index.
    """
    colors = dict(amap)
    for b in profile.right_heavy:
        admissible = admissible_right_indices(s, profile, amap, b)
        if not admissible:
            return None, b
        colors[b] = admissible[0]
    return colors, -1


def _right_csr(profile: SideProfile, n: int):
    ptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        ptr[v + 1] = ptr[v] + len(profile.right_of[v])
    idx = np.empty(int(ptr[-1]), dtype=np.int64)
    for v in range(n):
        idx[ptr[v] : ptr[v + 1]] = profile.right_of[v]
    return ptr, idx


def _event_variables(s: GraphSystem, profile: SideProfile, heavy: set, b: int) -> list:
    """Left-heavy vertices whose draw the bad event at b reads: the
    neighbors of b inside any of b's right-side graphs."""
    found = set()
    for j in profile.right_of[b]:
        for a in s.adj[j][b]:
            if a in heavy:
                found.add(a)
    return sorted(found)


def solve_bipartite(s: GraphSystem, seed=0, max_rounds: int | None = None):
    """Run the two-step process with resampling; returns (report, stats).

    Step 1 draws for the left-heavy pool, step 2 is the greedy pass; on
    failure at b, the draws of b's relevant neighbors are redrawn and
    step 2 reruns.  Success verifies before returning; exceeding
    max_rounds (default 1000 * n) reports BUDGET_EXCEEDED, never a false
    coloring.  Deterministic given the seed.
    """
    start = time.perf_counter()
    profile = side_profile(s)
    if max_rounds is None:
        max_rounds = 1000 * s.n
    n = s.n
    rng = np.random.default_rng(seed)
    amap = assign_left_heavy(profile, rng)
    choice = np.full(n, -1, dtype=np.int64)
    for a, j in amap.items():
        choice[a] = j

    b_arr = np.asarray(profile.right_heavy, dtype=np.int64)
    jr_ptr, jr_idx = _right_csr(profile, n)
    nbr_ptr, nbr_idx = neighbor_csr(s)
    bcolor = np.full(n, -1, dtype=np.int64)
    heavy = set(profile.left_heavy)
    hist = np.zeros(n, dtype=np.int64)
    rounds = 0
    while True:
        failing = int(
            kernels.greedy_pass(b_arr, jr_ptr, jr_idx, nbr_ptr, nbr_idx, n, choice, bcolor)
        )
        if failing < 0:
            assignment = np.where(choice >= 0, choice, bcolor)
            coloring = CooperativeColoring(tuple(int(j) for j in assignment))
            report = verify_coloring(s, coloring)
            if not report.valid:
                raise CoopColorError(
                    f"internal error: greedy pass produced an invalid coloring "
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
        hist[failing] += 1
        for a in _event_variables(s, profile, heavy, failing):
            options = profile.left_of[a]
            pick = options[int(rng.integers(len(options)))]
            amap[a] = pick
            choice[a] = pick


def lll_condition_bipartite(m: int, d: int, eps: float = 0.1):
    """Evaluate the three sufficient conditions for the two-step process.

    (i)   m >= (1+eps) * 2d / ln d
    (ii)  (1 - ln d / ((1+eps) d))^d >= 8 ln d / m
    (iii) m * d^2 * e / d^4 <= 1

    Returns (all three hold, diagnostics); diagnostics maps "i"/"ii"/
    "iii" to lhs, rhs and holds.  Extended precision throughout, so the
    power in (ii) stays meaningful for astronomically large d.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if eps <= 0:
        raise ValueError(f"need eps > 0, got {eps}")
    with mpmath.workdps(60):
        md = mpmath.mpf(m)
        dd = mpmath.mpf(d)
        slack = 1 + mpmath.mpf(eps)
        ln_d = mpmath.log(dd)
        need_m = slack * 2 * dd / ln_d
        holds_i = md >= need_m
        lhs_ii = (1 - ln_d / (slack * dd)) ** d
        rhs_ii = 8 * ln_d / md
        holds_ii = lhs_ii >= rhs_ii
        lhs_iii = md * dd**2 * mpmath.e / dd**4
        holds_iii = lhs_iii <= 1
        diagnostics = {
            "i": {"lhs": float(md), "rhs": float(need_m), "holds": bool(holds_i)},
            "ii": {"lhs": float(lhs_ii), "rhs": float(rhs_ii), "holds": bool(holds_ii)},
            "iii": {"lhs": float(lhs_iii), "rhs": 1.0, "holds": bool(holds_iii)},
        }
    return bool(holds_i and holds_ii and holds_iii), diagnostics
