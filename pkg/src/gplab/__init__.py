"""Runtime-analysis laboratory for simple genetic-programming algorithms.

The library evolves binary join-trees over signed variable terminals,
scores them with order- and majority-style expression rules (optionally
weighted), and measures how many fitness evaluations two algorithm
families need: a (1+1) hill-climber with or without parsimony
tie-breaking, and an archive-based optimizer that collects the whole
score/complexity trade-off front.  A seeded experiment harness turns
that into reproducible scaling studies.
"""

from .evolve import (
    AlgorithmKind,
    Individual,
    Population,
    SelectionRule,
    StepDiagnostics,
    TraceRecord,
    TrialResult,
    dominates,
    favors,
    one_plus_one_step,
    run_algorithm,
    smo_gp_step,
    weakly_dominates,
)
from .fitness import (
    MoFitness,
    ProblemKind,
    evaluate,
    evaluate_leaves,
    expressed_count,
    expressed_majority,
    expressed_order,
    load_weights,
    make_weights,
    mo_evaluate,
    tree_stats,
)
from .harness import (
    ExperimentConfig,
    InitKind,
    SuiteSummary,
    fit_growth,
    make_init,
    run_suite,
)
from .oracle import (
    brute_force_front,
    is_non_redundant,
    optimum_value,
    pareto_front,
    target_reached,
)
from .tree import (
    SyntaxTree,
    Terminal,
    TreeStats,
    complexity,
    delete_leaf,
    inorder_leaves,
    insert_at,
    parse_tree,
    substitute_leaf,
)
from .variation import MutationMode, hvl_prime, make_rng, mutate, sample_k

__version__ = "0.1.0"
