"""Cooperative coloring of graph systems.

Given m graphs sharing one vertex set, a cooperative coloring picks an
independent set in each graph so that together they cover every vertex.
The package bundles an exact backtracking decider, two randomized
constructive solvers (forests via a marking process, bipartite graphs
via a two-step greedy process), generators for uncolorable gadget
families and random benchmarks, numeric bounds, and a CLI.
"""

from .bipartite import (
    EmptyChoiceSet,
    SideProfile,
    admissible_right_indices,
    assign_left_heavy,
    greedy_right_pass,
    lll_condition_bipartite,
    side_profile,
    solve_bipartite,
)
from .bounds import (
    bipartite_asymptotic_threshold,
    bipartite_bounds,
    general_bounds,
    q_growth_check,
    tree_bounds,
)
from .exact import (
    BUDGET_EXCEEDED,
    COLORABLE,
    DEFAULT_NODE_BUDGET,
    UNCOLORABLE,
    SearchBudget,
    SolveReport,
    decide_colorable,
    enumerate_colorings,
)
from .files import (
    MalformedFile,
    emit_coloring,
    emit_instance,
    parse_coloring,
    parse_instance,
)
from .generators import (
    ForestFamily,
    InfeasibleDegree,
    hypercube_counterexample,
    product_extension,
    random_bipartite_system,
    random_forest_system,
    tree_counterexample,
    two_path_system,
)
from .system import (
    CoopColorError,
    CooperativeColoring,
    CycleDetected,
    DuplicateEdge,
    GraphSystem,
    IndexOutOfRange,
    InvalidAnnotation,
    LengthMismatch,
    MissingBipartition,
    NotAForest,
    OddCycleDetected,
    OutOfRangeVertex,
    SelfLoop,
    VerificationReport,
    bipartition,
    build_system,
    is_forest,
    is_independent,
    max_degree,
    root_forest,
    verify_coloring,
)
from .trees import (
    MarkMatrix,
    ResampleStats,
    independent_from_marks,
    lll_condition_tree,
    min_m_tree,
    sample_marks,
    solve_trees,
    tree_condition_value,
)

__version__ = "0.1.0"

__all__ = [
    "BUDGET_EXCEEDED",
    "COLORABLE",
    "DEFAULT_NODE_BUDGET",
    "UNCOLORABLE",
    "CoopColorError",
    "CooperativeColoring",
    "CycleDetected",
    "DuplicateEdge",
    "EmptyChoiceSet",
    "ForestFamily",
    "GraphSystem",
    "IndexOutOfRange",
    "InfeasibleDegree",
    "InvalidAnnotation",
    "LengthMismatch",
    "MalformedFile",
    "MarkMatrix",
    "MissingBipartition",
    "NotAForest",
    "OddCycleDetected",
    "OutOfRangeVertex",
    "ResampleStats",
    "SearchBudget",
    "SelfLoop",
    "SideProfile",
    "SolveReport",
    "VerificationReport",
    "admissible_right_indices",
    "assign_left_heavy",
    "bipartite_asymptotic_threshold",
    "bipartite_bounds",
    "bipartition",
    "build_system",
    "decide_colorable",
    "emit_coloring",
    "emit_instance",
    "enumerate_colorings",
    "general_bounds",
    "greedy_right_pass",
    "hypercube_counterexample",
    "independent_from_marks",
    "is_forest",
    "is_independent",
    "lll_condition_bipartite",
    "lll_condition_tree",
    "max_degree",
    "min_m_tree",
    "parse_coloring",
    "parse_instance",
    "product_extension",
    "q_growth_check",
    "random_bipartite_system",
    "random_forest_system",
    "root_forest",
    "sample_marks",
    "side_profile",
    "solve_bipartite",
    "solve_trees",
    "tree_bounds",
    "tree_condition_value",
    "tree_counterexample",
    "two_path_system",
    "verify_coloring",
]
