"""Numeric bounds on how many graphs guarantee a cooperative coloring.

For max degree d: general graphs need between d+2 and 2d graphs (exactly
2 at d=1, exactly 4 at d=2); forests have a log2(log2 d) lower bound and
an upper bound from the marking-process condition; bipartite graphs have
a log2 d lower bound and an O(d / ln d) reference upper bound whose
concrete sufficient condition only kicks in at enormous degrees.
Real-valued asymptotics are reported as references, never as
guarantees; only the exact inequalities are pass/fail.
"""

import math

from .bipartite import lll_condition_bipartite
from .trees import min_m_tree


def general_bounds(d: int):
    """(lower, upper) for general graphs of max degree d; both inclusive
    and exact at d = 1 and d = 2."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if d == 1:
        return (2, 2)
    return (d + 2, 2 * d)


def tree_bounds(d: int):
    """(real lower bound, sufficient count) for forests of max degree d.

    The lower bound log2(log2 d) is strict; the upper value is the least
    count satisfying the marking-process condition.
    """
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    return (math.log2(math.log2(d)), min_m_tree(d))


def bipartite_bounds(d: int, eps: float = 0.1):
    """(real lower bound, reference upper bound, sufficient count or None).

    The lower bound is log2 d (strict).  The reference (1+eps)*2d/ln d
    is the asymptotic shape of the upper bound, not a guarantee.  The
    sufficient count is the least m <= 2d passing all three conditions
    of the two-step process, or None when no such m exists; at small d
    the density condition m*d^2*e <= d^4 blocks every useful m, and at
    moderate d the coverage condition does.
    """
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if eps <= 0:
        raise ValueError(f"need eps > 0, got {eps}")
    lower = math.log2(d)
    reference = (1 + eps) * 2 * d / math.log(d)
    sufficient = None
    for m in range(1, 2 * d + 1):
        ok, _ = lll_condition_bipartite(m, d, eps)
        if ok:
            sufficient = m
            break
    return (lower, reference, sufficient)


def q_growth_check(m: int) -> bool:
    """Check the size and degree caps of the recursive forest family.

    Uses the recurrence n' = n^2 + n from the 4-vertex seed (sizes only,
    nothing is materialized): vertex count at level k must stay within
    2^(3*2^(k-2)-1) and max degree within 2^(2^(k-1)).  Valid for
    2 <= m <= 5.
    """
    if not 2 <= m <= 5:
        raise ValueError(f"level must be in [2, 5], got {m}")
    n = 4
    delta = 2
    for _ in range(3, m + 1):
        delta = n
        n = n * n + n
    return n <= 2 ** (3 * 2 ** (m - 2) - 1) and delta <= 2 ** (2 ** (m - 1))


def bipartite_asymptotic_threshold(eps: float = 0.1, max_power: int = 256):
    """Smallest power-of-two degree where the reference count suffices.

    Scans d = 2, 4, 8, ... up to 2**max_power, testing the two-step
    conditions at m = ceil((1+eps)*2d/ln d); returns the first d that
    passes, or None.  The answer is huge (beyond 2^170 at eps = 0.1),
    which is the honest content of the asymptotic claim.
    """
    if eps <= 0:
        raise ValueError(f"need eps > 0, got {eps}")
    for k in range(1, max_power + 1):
        d = 1 << k
        m = math.ceil((1 + eps) * 2 * d / (k * math.log(2)))
        ok, _ = lll_condition_bipartite(m, d, eps)
        if ok:
            return d
    return None
