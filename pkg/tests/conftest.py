"""Shared test utilities: brute-force oracles and random system builders.

The oracles here are deliberately independent of the package internals:
naive_colorings enumerates every assignment from the definition, and
exact_event_probabilities integrates the two-step process's bad events
with exact rational arithmetic.
"""

import itertools
from fractions import Fraction

import numpy as np

import coopcolor as cc

ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, passed, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}: criterion {num} - {detail}")


def naive_colorings(s):
    """Every valid assignment, straight from the definition.

    Enumerates all m**n per-vertex choices in lexicographic order and
    keeps those where no edge of graph j has both endpoints assigned j.
    """
    if s.n == 0:
        return [()]
    if s.m == 0:
        return []
    grids = np.stack(
        np.meshgrid(*([np.arange(s.m)] * s.n), indexing="ij"), axis=-1
    ).reshape(-1, s.n)
    ok = np.ones(len(grids), dtype=bool)
    for j in range(s.m):
        for u, v in s.edges[j]:
            ok &= ~((grids[:, u] == j) & (grids[:, v] == j))
    return [tuple(int(x) for x in row) for row in grids[ok]]


def random_system(rng, n, m, p=0.3):
    """Random simple graphs from independent edge coins."""
    edge_lists = []
    for _ in range(m):
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        edge_lists.append(edges)
    return cc.build_system(n, edge_lists)


def exact_event_probabilities(s, profile, b, over=None):
    """Exact rational probabilities of the bad event at right-heavy b.

    Enumerates the draws of the left-heavy vertices in ``over`` (default:
    only those adjacent to b in one of b's right-side graphs; the other
    draws integrate out exactly under the product measure).  Returns
    (Pr[no admissible index], {j: Pr[j excluded]}, {(a, j): Pr[a drew j]})
    as Fractions.
    """
    heavy = set(profile.left_heavy)
    if over is None:
        over = sorted(
            {a for j in profile.right_of[b] for a in s.adj[j][b] if a in heavy}
        )
    option_lists = [profile.left_of[a] for a in over]
    weight = Fraction(1)
    for options in option_lists:
        weight /= len(options)
    p_bad = Fraction(0)
    p_excluded = {j: Fraction(0) for j in profile.right_of[b]}
    marginals = {
        (a, j): Fraction(0) for a, options in zip(over, option_lists) for j in options
    }
    for combo in itertools.product(*option_lists):
        amap = dict(zip(over, combo))
        if not cc.admissible_right_indices(s, profile, amap, b):
            p_bad += weight
        for j in profile.right_of[b]:
            if any(amap.get(a) == j for a in s.adj[j][b]):
                p_excluded[j] += weight
        for a, j in zip(over, combo):
            marginals[(a, j)] += weight
    return p_bad, p_excluded, marginals


def enumeration_cost(s, profile, b):
    """Number of draw combinations exact_event_probabilities would visit."""
    heavy = set(profile.left_heavy)
    relevant = sorted(
        {a for j in profile.right_of[b] for a in s.adj[j][b] if a in heavy}
    )
    cost = 1
    for a in relevant:
        cost *= len(profile.left_of[a])
    return cost
