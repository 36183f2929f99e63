"""Command-line front end: gen, solve, verify, bounds, bench.

Exit codes: 0 coloring found / valid, 1 invalid coloring, 2 proven
uncolorable, 3 budget exhausted, 64 bad flags, 65 malformed input,
66 algorithm/instance mismatch.  Machine-readable summary lines go to
standard output, human-readable detail to standard error.  The env var
COOPCOLOR_SEED supplies the default seed.
"""

import argparse
import csv
import os
import statistics
import sys

from . import bipartite as bip_mod
from . import bounds as bounds_mod
from . import exact as exact_mod
from . import files
from . import generators as gen_mod
from . import trees as tree_mod
from .system import (
    IndexOutOfRange,
    LengthMismatch,
    MissingBipartition,
    NotAForest,
    max_degree,
    verify_coloring,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNCOLORABLE = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_MISMATCH = 66

SEED_ENV = "COOPCOLOR_SEED"

_OUTCOME_EXIT = {
    exact_mod.COLORABLE: EXIT_OK,
    exact_mod.UNCOLORABLE: EXIT_UNCOLORABLE,
    exact_mod.BUDGET_EXCEEDED: EXIT_BUDGET,
}

_GEN_KINDS = ("tree-lb", "bip-lb", "random-trees", "random-bip")
_ALGOS = ("exact", "tree-lll", "bip-semirandom")
_BENCH_DEFAULT_KIND = {
    "exact": "random-trees",
    "tree-lll": "random-trees",
    "bip-semirandom": "random-bip",
}


class CLIParser(argparse.ArgumentParser):
    """argparse variant that exits 64 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _resolve_seed(seed, parser):
    if seed is not None:
        return seed
    raw = os.environ.get(SEED_ENV, "").strip()
    if not raw:
        return 0
    try:
        return int(raw)
    except ValueError:
        parser.error(f"{SEED_ENV} must be an integer, got {raw!r}")


def _read_text(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_DATA)


def _write_text(path, text):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_DATA)


def _parse_instance(path):
    try:
        return files.parse_instance(_read_text(path))
    except files.MalformedFile as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_DATA)


def _machine_line(pairs):
    print(" ".join(f"{k}={v}" for k, v in pairs))


def _require_params(parser, args, names):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        parser.error(f"{args.kind} requires {', '.join(missing)}")


def _build_instance(kind, args, seed, parser):
    """Instance plus metadata for gen and bench; usage errors exit 64."""
    try:
        if kind == "tree-lb":
            _require_params(parser, args, ["m"])
            family = gen_mod.tree_counterexample(args.m, connect=args.connect)
            return family.system, {
                "generator": kind,
                "params": {"m": args.m, "connect": bool(args.connect)},
            }
        if kind == "bip-lb":
            _require_params(parser, args, ["m"])
            return gen_mod.hypercube_counterexample(args.m), {
                "generator": kind,
                "params": {"m": args.m},
            }
        if kind == "random-trees":
            _require_params(parser, args, ["n", "m", "d"])
            system = gen_mod.random_forest_system(args.n, args.m, args.d, seed)
        else:
            _require_params(parser, args, ["n", "m", "d"])
            system = gen_mod.random_bipartite_system(args.n, args.m, args.d, seed)
    except (ValueError, gen_mod.InfeasibleDegree) as exc:
        parser.error(str(exc))
    return system, {
        "generator": kind,
        "params": {"n": args.n, "m": args.m, "d": args.d},
        "seed": seed,
    }


def _cmd_gen(args):
    parser = args.parser
    seed = _resolve_seed(args.seed, parser)
    system, metadata = _build_instance(args.kind, args, seed, parser)
    text = files.emit_instance(system, metadata)
    summary = f"n={system.n} m={system.m} max_degree={max_degree(system)}"
    if args.out:
        _write_text(args.out, text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def _cmd_solve(args):
    parser = args.parser
    system, _metadata = _parse_instance(args.instance)
    seed = _resolve_seed(args.seed, parser)
    stats = None
    try:
        if args.algo == "exact":
            try:
                budget = exact_mod.SearchBudget(
                    max_nodes=args.max_nodes
                    if args.max_nodes is not None
                    else exact_mod.DEFAULT_NODE_BUDGET,
                    deadline=args.deadline,
                )
            except ValueError as exc:
                parser.error(str(exc))
            report = exact_mod.decide_colorable(system, budget)
        elif args.algo == "tree-lll":
            report, stats = tree_mod.solve_trees(system, seed=seed, max_rounds=args.max_rounds)
        else:
            report, stats = bip_mod.solve_bipartite(system, seed=seed, max_rounds=args.max_rounds)
    except (NotAForest, MissingBipartition) as exc:
        print(f"error: {args.algo} cannot run on this instance: {exc}", file=sys.stderr)
        return EXIT_MISMATCH

    print(
        f"instance: n={system.n} m={system.m} max_degree={max_degree(system)}",
        file=sys.stderr,
    )
    pairs = [("outcome", report.outcome), ("algo", args.algo)]
    if args.algo == "exact":
        pairs.append(("nodes", report.nodes_expanded))
        print(
            f"search: {report.nodes_expanded} nodes in {report.elapsed:.3f} s",
            file=sys.stderr,
        )
    else:
        pairs.extend(
            [("seed", seed), ("rounds", stats.rounds), ("resamples", stats.resampled_events)]
        )
        print(
            f"resampling: {stats.resampled_events} events over {stats.rounds} rounds "
            f"in {report.elapsed:.3f} s",
            file=sys.stderr,
        )
    pairs.append(("elapsed", f"{report.elapsed:.6f}"))
    if report.outcome == exact_mod.COLORABLE and args.out:
        _write_text(args.out, files.emit_coloring(report.coloring))
        pairs.append(("out", args.out))
    _machine_line(pairs)
    return _OUTCOME_EXIT[report.outcome]


def _cmd_verify(args):
    system, _metadata = _parse_instance(args.instance)
    try:
        coloring = files.parse_coloring(_read_text(args.coloring))
        report = verify_coloring(system, coloring)
    except (files.MalformedFile, LengthMismatch, IndexOutOfRange) as exc:
        print(f"error: {args.coloring}: {exc}", file=sys.stderr)
        return EXIT_DATA
    if report.valid:
        _machine_line([("outcome", "valid")])
        return EXIT_OK
    for j, (u, v) in report.violations:
        print(f"violation: graph {j} edge ({u}, {v}) has both endpoints colored {j}", file=sys.stderr)
    for v in report.uncovered:
        print(f"violation: vertex {v} is covered by no color class", file=sys.stderr)
    _machine_line(
        [
            ("outcome", "invalid"),
            ("violations", len(report.violations)),
            ("uncovered", len(report.uncovered)),
        ]
    )
    return EXIT_INVALID


def _cmd_bounds(args):
    parser = args.parser
    rows = [("class", args.graph_class), ("max_degree", args.d)]
    try:
        if args.graph_class == "general":
            lo, hi = bounds_mod.general_bounds(args.d)
            rows += [("lower_m", lo), ("upper_m", hi)]
        elif args.graph_class == "tree":
            lo, suff = bounds_mod.tree_bounds(args.d)
            rows += [("lower_real", f"{lo:.6f}"), ("sufficient_m", suff)]
        else:
            lo, ref, suff = bounds_mod.bipartite_bounds(args.d, args.eps)
            rows += [
                ("eps", args.eps),
                ("lower_real", f"{lo:.6f}"),
                ("reference_upper", f"{ref:.6f}"),
                ("sufficient_m", "none" if suff is None else suff),
            ]
    except ValueError as exc:
        parser.error(str(exc))
    width = max(len(key) for key, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}")
    return EXIT_OK


def _cmd_bench(args):
    parser = args.parser
    if args.trials < 1:
        parser.error(f"--trials must be >= 1, got {args.trials}")
    kind = args.kind or _BENCH_DEFAULT_KIND[args.algo]
    base_seed = _resolve_seed(args.seed, parser)
    args.kind = kind  # _build_instance reports errors under the real kind
    rows = []
    successes = 0
    for t in range(args.trials):
        tseed = base_seed + t
        system, _metadata = _build_instance(kind, args, tseed, parser)
        try:
            if args.algo == "exact":
                budget = exact_mod.SearchBudget(
                    max_nodes=args.max_nodes
                    if args.max_nodes is not None
                    else exact_mod.DEFAULT_NODE_BUDGET
                )
                report = exact_mod.decide_colorable(system, budget)
                rounds, resamples = report.nodes_expanded, 0
            elif args.algo == "tree-lll":
                report, stats = tree_mod.solve_trees(system, seed=tseed, max_rounds=args.max_rounds)
                rounds, resamples = stats.rounds, stats.resampled_events
            else:
                report, stats = bip_mod.solve_bipartite(
                    system, seed=tseed, max_rounds=args.max_rounds
                )
                rounds, resamples = stats.rounds, stats.resampled_events
        except (NotAForest, MissingBipartition) as exc:
            print(f"error: {args.algo} cannot run on {kind} instances: {exc}", file=sys.stderr)
            return EXIT_MISMATCH
        if report.outcome == exact_mod.COLORABLE:
            successes += 1
        rows.append([t, tseed, report.outcome, rounds, resamples, report.elapsed])

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["trial", "seed", "outcome", "rounds", "resamples", "elapsed_s"])
    for t, tseed, outcome, rounds, resamples, elapsed in rows:
        writer.writerow([t, tseed, outcome, rounds, resamples, f"{elapsed:.6f}"])
    writer.writerow(
        [
            "summary",
            base_seed,
            f"{successes}/{args.trials}",
            statistics.median(row[3] for row in rows),
            statistics.median(row[4] for row in rows),
            f"{sum(row[5] for row in rows):.6f}",
        ]
    )
    return EXIT_OK


def _add_gen_flags(sub):
    sub.add_argument("--n", type=int, default=None, help="vertex count (random kinds)")
    sub.add_argument("--m", type=int, default=None, help="number of graphs / family level")
    sub.add_argument("--d", type=int, default=None, help="degree cap (random kinds)")
    sub.add_argument("--seed", type=int, default=None, help=f"RNG seed (default ${SEED_ENV} or 0)")
    sub.add_argument(
        "--connect", action="store_true", help="chain each forest into a single tree (tree-lb)"
    )


def build_parser() -> CLIParser:
    parser = CLIParser(prog="coopcolor", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_gen = commands.add_parser("gen", help="generate an instance file")
    p_gen.add_argument("kind", choices=_GEN_KINDS)
    _add_gen_flags(p_gen)
    p_gen.add_argument("--out", default=None, help="instance path (default: standard output)")
    p_gen.set_defaults(func=_cmd_gen, parser=p_gen)

    p_solve = commands.add_parser("solve", help="run a solver on an instance file")
    p_solve.add_argument("algo", choices=_ALGOS)
    p_solve.add_argument("instance", help="instance file path")
    p_solve.add_argument("--seed", type=int, default=None)
    p_solve.add_argument("--out", default=None, help="coloring output path")
    p_solve.add_argument("--max-nodes", type=int, default=None, help="exact-search node budget")
    p_solve.add_argument("--deadline", type=float, default=None, help="exact-search wall limit (s)")
    p_solve.add_argument("--max-rounds", type=int, default=None, help="resampling round cap")
    p_solve.set_defaults(func=_cmd_solve, parser=p_solve)

    p_verify = commands.add_parser("verify", help="check a coloring file against an instance")
    p_verify.add_argument("instance")
    p_verify.add_argument("coloring")
    p_verify.set_defaults(func=_cmd_verify, parser=p_verify)

    p_bounds = commands.add_parser("bounds", help="print known bounds for a graph class")
    p_bounds.add_argument(
        "--class", dest="graph_class", required=True, choices=("general", "tree", "bipartite")
    )
    p_bounds.add_argument("--d", type=int, required=True, help="max degree")
    p_bounds.add_argument("--eps", type=float, default=0.1, help="analysis slack (bipartite)")
    p_bounds.set_defaults(func=_cmd_bounds, parser=p_bounds)

    p_bench = commands.add_parser("bench", help="run seeded solver trials, CSV to stdout")
    p_bench.add_argument("algo", choices=_ALGOS)
    p_bench.add_argument("--kind", choices=_GEN_KINDS, default=None)
    _add_gen_flags(p_bench)
    p_bench.add_argument("--trials", type=int, default=10)
    p_bench.add_argument("--max-rounds", type=int, default=None)
    p_bench.add_argument("--max-nodes", type=int, default=None)
    p_bench.set_defaults(func=_cmd_bench, parser=p_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entry(argv=None):
    raise SystemExit(main(argv))
