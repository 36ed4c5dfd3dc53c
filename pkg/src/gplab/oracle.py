"""Closed-form optimum and Pareto-front oracles, plus a brute-force
enumerator that verifies them independently at tiny sizes.

All four problems share the same trade-off structure under strictly
positive weights: the empty tree at (0, 0), and for each j in 1..n the
tree holding exactly the j heaviest variables once, at value
(sum of the j largest weights, 2j - 1).  That gives a front of exactly
n + 1 vectors (the complexities alone are pairwise distinct).

The brute-force check enumerates leaf sequences rather than trees:
fitness depends only on the inorder leaf sequence, and every sequence
of length L is realized by trees of complexity exactly 2L - 1, so the
exponentially many shapes per sequence collapse into one candidate.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .fitness import (
    MoFitness,
    ProblemKind,
    evaluate_leaves,
    tree_stats,
    weight_sum,
)
from .tree import SyntaxTree

BRUTE_FORCE_MAX_N = 4
BRUTE_FORCE_MAX_LEAVES = 8


def optimum_value(problem: ProblemKind, w: np.ndarray) -> float:
    """Best reachable score: every variable expressed once."""
    n = len(w)
    full = np.ones(n, dtype=bool)
    if not problem.weighted:
        return float(n)
    return weight_sum(w, full)


def pareto_front(problem: ProblemKind, w: np.ndarray) -> frozenset[MoFitness]:
    """The n+1 optimal trade-off vectors for the given weights.

    Weights are sorted descending internally (stable, so the input
    order never matters); the j-th front value selects the j heaviest
    variables and sums them with the same procedure evaluation uses,
    which keeps front membership an exact float comparison.
    """
    n = len(w)
    heaviest_first = np.argsort(-w, kind="stable")
    vectors = [MoFitness(0.0, 0)]
    mask = np.zeros(n, dtype=bool)
    for j in range(1, n + 1):
        mask[heaviest_first[j - 1]] = True
        f = float(j) if not problem.weighted else weight_sum(w, mask)
        vectors.append(MoFitness(f, 2 * j - 1))
    front = frozenset(vectors)
    assert len(front) == n + 1  # complexities differ, so no collisions
    return front


def _non_dominated(points) -> frozenset[MoFitness]:
    best_f_per_c: dict[int, float] = {}
    for f, c in points:
        if c not in best_f_per_c or f > best_f_per_c[c]:
            best_f_per_c[c] = f
    kept = []
    running = -np.inf
    for c in sorted(best_f_per_c):
        if best_f_per_c[c] > running:
            kept.append(MoFitness(best_f_per_c[c], c))
            running = best_f_per_c[c]
    return frozenset(kept)


def brute_force_front(problem: ProblemKind, w: np.ndarray,
                      max_leaves: int) -> frozenset[MoFitness]:
    """Exhaustive front over all leaf sequences of length 0..max_leaves.

    Only meant to cross-check :func:`pareto_front` at toy sizes; with
    max_leaves >= n the two agree, since every front vector is realized
    with at most n leaves.
    """
    n = len(w)
    if n > BRUTE_FORCE_MAX_N or max_leaves > BRUTE_FORCE_MAX_LEAVES:
        raise ValueError(
            f"brute force limited to n <= {BRUTE_FORCE_MAX_N} and "
            f"max_leaves <= {BRUTE_FORCE_MAX_LEAVES}")
    alphabet = [c for i in range(1, n + 1) for c in (i, -i)]
    points = [(0.0, 0)]
    for length in range(1, max_leaves + 1):
        c = 2 * length - 1
        for seq in product(alphabet, repeat=length):
            codes = np.asarray(seq, dtype=np.int64)
            points.append((evaluate_leaves(problem, codes, w), c))
    return _non_dominated(points)


def is_non_redundant(tree: SyntaxTree, problem: ProblemKind, w: np.ndarray) -> bool:
    """True iff every leaf earns its keep: complexity equals 2k - 1 for
    k expressed variables.  The empty tree counts as non-redundant."""
    if tree.is_empty:
        return True
    stats = tree_stats(problem, tree, w)
    return stats.surplus == 0


def target_reached(multi_objective: bool, state, problem: ProblemKind,
                   w: np.ndarray, require_non_redundant: bool = False) -> bool:
    """Success predicate ending a run.

    Single-objective runs succeed when the current individual's score
    equals the optimum (complexity unconstrained unless the stricter
    flag is set); multi-objective runs succeed when the archive covers
    every front vector.
    """
    if multi_objective:
        return pareto_front(problem, w) <= state.vectors()
    if state.fitness.f_value != optimum_value(problem, w):
        return False
    if require_non_redundant:
        return is_non_redundant(state.tree, problem, w)
    return True
