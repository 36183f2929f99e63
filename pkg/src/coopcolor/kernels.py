"""Hot inner loops, compiled with numba when available.

Every kernel exists in two flavours: the plain Python/NumPy function
(suffix ``_py``) and, when numba is importable and not disabled, an
``@njit``-compiled twin.  The module-level names without suffix dispatch
to whichever backend is active.  Set ``COOPCOLOR_NO_NUMBA=1`` to force
the pure fallback; ``coopcolor.kernels.BACKEND`` reports the choice.

Kernels never draw randomness and never allocate surprise state: callers
pass preallocated arrays, which keeps both backends bit-identical.
"""

import os

import numpy as np

NUMBA_ENV = "COOPCOLOR_NO_NUMBA"

# dfs_step status codes
EXHAUSTED = 0
FOUND = 1
PAUSED = 2
BUFFER_FULL = 3


def numba_wanted() -> bool:
    """True when the environment allows the numba backend."""
    flag = os.environ.get(NUMBA_ENV, "").strip()
    if flag not in ("", "0"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def _dfs_step(nbr_ptr, nbr_idx, n, m, color, state, node_limit, out, want_all):
    """Resumable depth-first search over per-vertex color choices.

    Vertices are assigned in index order, colors tried in ascending
    order; color j is admissible at v iff no already-colored neighbor of
    v in graph j carries j.  ``color`` (len n, -1 = unassigned) together
    with ``state`` = [v, next color to try at v] captures the whole
    search position, so the caller can run the search in slices.

    Returns (status, nodes, found): nodes counts color placements in
    this slice; found counts complete assignments written to ``out``
    (enumerate mode, want_all=True) during this slice.
    """
    v = state[0]
    c = state[1]
    nodes = 0
    found = 0
    cap = out.shape[0]
    while True:
        if nodes >= node_limit:
            state[0] = v
            state[1] = c
            return PAUSED, nodes, found
        placed = False
        while c < m:
            key = c * n + v
            ok = True
            for t in range(nbr_ptr[key], nbr_ptr[key + 1]):
                if color[nbr_idx[t]] == c:
                    ok = False
                    break
            if ok:
                placed = True
                break
            c += 1
        if placed:
            color[v] = c
            nodes += 1
            if v == n - 1:
                if not want_all:
                    state[0] = v
                    state[1] = c
                    return FOUND, nodes, found
                out[found, :] = color
                found += 1
                c = color[v] + 1
                color[v] = -1
                if found >= cap:
                    state[0] = v
                    state[1] = c
                    return BUFFER_FULL, nodes, found
            else:
                v += 1
                c = 0
        else:
            v -= 1
            if v < 0:
                state[0] = v
                state[1] = c
                return EXHAUSTED, nodes, found
            c = color[v] + 1
            color[v] = -1


def _first_uncovered_loop(bits, parents):
    """Lowest-index vertex covered by no derived set, or -1.

    A vertex v is covered by graph i iff bits[i, v] is set and v is a
    root (parents[i, v] < 0) or its parent's bit is clear.
    """
    m, n = bits.shape
    for v in range(n):
        covered = False
        for i in range(m):
            if bits[i, v]:
                p = parents[i, v]
                if p < 0 or not bits[i, p]:
                    covered = True
                    break
        if not covered:
            return v
    return -1


def _first_uncovered_np(bits, parents):
    """Vectorized twin of :func:`_first_uncovered_loop`."""
    member = membership_matrix(bits, parents)
    uncovered = np.flatnonzero(~member.any(axis=0))
    return int(uncovered[0]) if uncovered.size else -1


def membership_matrix(bits, parents):
    """Per-graph derived-set membership, vectorized (both backends).

    bits may carry extra leading axes (used to batch Monte Carlo draws);
    parents must broadcast against it.
    """
    safe_parent = np.maximum(parents, 0)
    parent_bits = np.take_along_axis(bits, safe_parent, axis=-1)
    return bits & ((parents < 0) | ~parent_bits)


def _greedy_pass(b_arr, jr_ptr, jr_idx, nbr_ptr, nbr_idx, n, choice, out_color):
    """One greedy pass over the right-heavy vertices, ascending index.

    For each b, walks its right-side graph indices in ascending order
    and takes the first one not excluded by a neighbor's choice; writes
    it to out_color[b].  Returns the first b with no admissible index,
    or -1 when the pass completes.
    """
    for t in range(b_arr.shape[0]):
        b = b_arr[t]
        chosen = -1
        for k in range(jr_ptr[b], jr_ptr[b + 1]):
            j = jr_idx[k]
            key = j * n + b
            excluded = False
            for q in range(nbr_ptr[key], nbr_ptr[key + 1]):
                if choice[nbr_idx[q]] == j:
                    excluded = True
                    break
            if not excluded:
                chosen = j
                break
        if chosen < 0:
            return b
        out_color[b] = chosen
    return -1


def _capped_insert(cand_u, cand_v, cap, slots, deg, edge_u, edge_v):
    """Insert candidate edges while both endpoints keep degree < cap.

    Duplicates are skipped.  slots is an (n, cap) scratch of current
    neighbors, deg the per-vertex degree counter.  Returns the number of
    edges written to edge_u/edge_v.
    """
    count = 0
    for k in range(cand_u.shape[0]):
        u = cand_u[k]
        v = cand_v[k]
        if deg[u] >= cap or deg[v] >= cap:
            continue
        dup = False
        for t in range(deg[u]):
            if slots[u, t] == v:
                dup = True
                break
        if dup:
            continue
        slots[u, deg[u]] = v
        slots[v, deg[v]] = u
        deg[u] += 1
        deg[v] += 1
        edge_u[count] = u
        edge_v[count] = v
        count += 1
    return count


# Pure backends, always importable (benchmarks compare them directly).
dfs_step_py = _dfs_step
first_uncovered_py = _first_uncovered_np
greedy_pass_py = _greedy_pass
capped_insert_py = _capped_insert

_JIT_CACHE: dict | None = None


def jit_kernels():
    """Compile (once) and return the numba kernels, keyed by name.

    Raises ImportError when numba is missing; ignores COOPCOLOR_NO_NUMBA
    so benchmarks can compare backends inside one process.
    """
    global _JIT_CACHE
    if _JIT_CACHE is None:
        from numba import njit

        jit = njit(cache=True)
        _JIT_CACHE = {
            "dfs_step": jit(_dfs_step),
            "first_uncovered": jit(_first_uncovered_loop),
            "greedy_pass": jit(_greedy_pass),
            "capped_insert": jit(_capped_insert),
        }
    return _JIT_CACHE


if numba_wanted():
    BACKEND = "numba"
    _k = jit_kernels()
    dfs_step = _k["dfs_step"]
    first_uncovered = _k["first_uncovered"]
    greedy_pass = _k["greedy_pass"]
    capped_insert = _k["capped_insert"]
else:
    BACKEND = "python"
    dfs_step = dfs_step_py
    first_uncovered = first_uncovered_py
    greedy_pass = greedy_pass_py
    capped_insert = capped_insert_py
