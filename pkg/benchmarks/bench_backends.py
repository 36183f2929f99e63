#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernel backends in one process.

Times the exact-search kernel (node placements/second on the level-3
forest gadget, fixed node budget so both backends do identical work) and
the greedy right-pass kernel (passes/second on a random bipartite
instance).  jit_kernels() ignores COOPCOLOR_NO_NUMBA, so this script
reports both backends regardless of the environment; without numba it
falls back to reporting the pure backend alone.

Usage: python3 benchmarks/bench_backends.py [--nodes N] [--passes P]
"""

import argparse
import time

import numpy as np

from coopcolor import kernels
from coopcolor.bipartite import _right_csr, side_profile
from coopcolor.generators import random_bipartite_system, tree_counterexample
from coopcolor.system import lower_neighbor_csr, neighbor_csr


def time_dfs(dfs_step, system, node_budget):
    nbr_ptr, nbr_idx = lower_neighbor_csr(system)
    color = np.full(system.n, -1, dtype=np.int64)
    state = np.array([0, 0], dtype=np.int64)
    out = np.empty((1, system.n), dtype=np.int64)
    dfs_step(nbr_ptr, nbr_idx, system.n, system.m, color, state, 1, out, False)  # warmup
    color[:] = -1
    state[:] = 0
    t0 = time.perf_counter()
    status, nodes, _ = dfs_step(
        nbr_ptr, nbr_idx, system.n, system.m, color, state, node_budget, out, False
    )
    elapsed = time.perf_counter() - t0
    return nodes / elapsed, nodes, elapsed


def time_greedy(greedy_pass, system, passes):
    profile = side_profile(system)
    n = system.n
    rng = np.random.default_rng(0)
    choice = np.full(n, -1, dtype=np.int64)
    for a in profile.left_heavy:
        options = profile.left_of[a]
        choice[a] = options[int(rng.integers(len(options)))]
    b_arr = np.asarray(profile.right_heavy, dtype=np.int64)
    jr_ptr, jr_idx = _right_csr(profile, n)
    nbr_ptr, nbr_idx = neighbor_csr(system)
    bcolor = np.full(n, -1, dtype=np.int64)
    greedy_pass(b_arr, jr_ptr, jr_idx, nbr_ptr, nbr_idx, n, choice, bcolor)  # warmup
    t0 = time.perf_counter()
    for _ in range(passes):
        greedy_pass(b_arr, jr_ptr, jr_idx, nbr_ptr, nbr_idx, n, choice, bcolor)
    elapsed = time.perf_counter() - t0
    return passes / elapsed, elapsed


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nodes", type=int, default=2_000_000, help="search node budget")
    parser.add_argument("--passes", type=int, default=200, help="greedy passes to time")
    args = parser.parse_args()

    backends = [("python", {"dfs_step": kernels.dfs_step_py, "greedy_pass": kernels.greedy_pass_py})]
    try:
        backends.append(("numba", kernels.jit_kernels()))
    except ImportError:
        print("numba unavailable; reporting the pure backend only")

    search_system = tree_counterexample(3).system
    greedy_system = random_bipartite_system(2000, 16, 8, seed=0)

    print(f"{'backend':<8} {'kernel':<12} {'rate':>16} {'work':>12} {'elapsed_s':>10}")
    rates = {}
    for name, table in backends:
        rate, nodes, elapsed = time_dfs(table["dfs_step"], search_system, args.nodes)
        rates[(name, "dfs")] = rate
        print(f"{name:<8} {'dfs_step':<12} {rate:>12.0f}/s {nodes:>9} nd {elapsed:>10.3f}")
        rate, elapsed = time_greedy(table["greedy_pass"], greedy_system, args.passes)
        rates[(name, "greedy")] = rate
        print(f"{name:<8} {'greedy_pass':<12} {rate:>12.0f}/s {args.passes:>9} ps {elapsed:>10.3f}")

    if ("numba", "dfs") in rates:
        for kern in ("dfs", "greedy"):
            speedup = rates[("numba", kern)] / rates[("python", kern)]
            print(f"speedup {kern}: {speedup:.1f}x")


if __name__ == "__main__":
    main()
