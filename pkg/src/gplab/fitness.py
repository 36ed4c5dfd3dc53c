"""Variable-expression fitness functions and the two-objective value.

Four problem kinds are supported.  All of them score a tree by the
summed weight of its *expressed* positive variables; they differ in the
expression rule and in whether the configured weights matter:

* order / weighted order: xi is expressed iff the first occurrence of
  xi or ~xi in the inorder leaf sequence is the positive one.
* majority / weighted majority: xi is expressed iff xi occurs at least
  as often as ~xi and at least once.  Ties count as expressed.

The unweighted kinds score with unit weights regardless of the weight
vector (every expressed variable contributes 1).

Fitness depends only on the inorder leaf sequence, never on the tree
shape, so every entry point also accepts a raw code sequence.  All
weight sums go through :func:`weight_sum` so that equal expressed sets
produce bit-identical floats everywhere (selection and the front
oracles compare floats exactly, without tolerances).
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

import numpy as np

from .tree import SyntaxTree, TreeStats, as_code


class ProblemKind(Enum):
    ORDER = "order"
    MAJORITY = "majority"
    WORDER = "worder"
    WMAJORITY = "wmajority"

    @property
    def weighted(self) -> bool:
        return self in (ProblemKind.WORDER, ProblemKind.WMAJORITY)

    @property
    def order_based(self) -> bool:
        return self in (ProblemKind.ORDER, ProblemKind.WORDER)


class MoFitness(NamedTuple):
    """The pair that selection and dominance reason about: the score to
    maximize and the node count to minimize."""

    f_value: float
    complexity: int


# -- weights ---------------------------------------------------------------

WEIGHT_FAMILIES = ("unit", "harmonic", "pow2")


def validate_weights(weights) -> np.ndarray:
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("weights must be a non-empty 1-d vector")
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ValueError("all weights must be finite and strictly positive")
    w = w.copy()
    w.flags.writeable = False
    return w


def make_weights(family: str, n: int) -> np.ndarray:
    """Named weight family of size n: unit (all 1), harmonic (1/i) or
    pow2 (2**(n-i), largest first)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == "unit":
        w = np.ones(n)
    elif family == "harmonic":
        w = 1.0 / np.arange(1, n + 1)
    elif family == "pow2":
        w = 2.0 ** np.arange(n - 1, -1, -1)
    else:
        raise ValueError(f"unknown weight family {family!r}; expected one of {WEIGHT_FAMILIES}")
    return validate_weights(w)


def load_weights(path) -> np.ndarray:
    """Explicit weight vector from a text file, one weight per line."""
    with open(path) as fh:
        values = [float(line) for line in (raw.strip() for raw in fh) if line and not line.startswith("#")]
    if not values:
        raise ValueError(f"no weights found in {path}")
    return validate_weights(values)


def weight_sum(w: np.ndarray, mask: np.ndarray) -> float:
    """Sum of the selected weights.

    The one summation procedure used by evaluation and by the front
    oracles alike: extract, sort ascending by value, then numpy-sum.
    Selecting the same weight multiset therefore always yields the same
    float, no matter how the weight vector was ordered, which keeps the
    exact fitness comparisons and front-membership checks sound.
    """
    selected = w[mask]
    selected.sort()
    return float(np.sum(selected))


# -- expression rules -------------------------------------------------------


def _codes_array(leaves) -> np.ndarray:
    if isinstance(leaves, SyntaxTree):
        return leaves.leaf_codes
    if isinstance(leaves, np.ndarray) and leaves.dtype.kind == "i":
        return leaves
    return np.asarray([as_code(t) for t in leaves], dtype=np.int64)


def _check_indices(codes: np.ndarray, n: int) -> None:
    if codes.size and int(np.max(np.abs(codes))) > n:
        raise ValueError(f"terminal index exceeds problem size n={n}")


def order_mask(codes: np.ndarray, n: int) -> np.ndarray:
    """Boolean mask over variables 1..n expressed under the order rule."""
    first = np.zeros(n + 1, dtype=np.int64)
    # reversed scatter: the last write per index wins, i.e. the sign at
    # the first occurrence in forward order
    first[np.abs(codes[::-1])] = codes[::-1]
    return first[1:] > 0


def majority_mask(codes: np.ndarray, n: int) -> np.ndarray:
    """Boolean mask over variables 1..n expressed under the majority rule."""
    counts = np.bincount(codes + n, minlength=2 * n + 1)
    positive = counts[n + 1:]
    negated = counts[n - 1::-1]
    return (positive >= negated) & (positive >= 1)


def expressed_mask(problem: ProblemKind, codes: np.ndarray, n: int) -> np.ndarray:
    return order_mask(codes, n) if problem.order_based else majority_mask(codes, n)


def expressed_order(leaves, n: int | None = None) -> set[int]:
    """Variables whose first occurrence among {xi, ~xi} is positive."""
    codes = _codes_array(leaves)
    if n is None:
        n = int(np.max(np.abs(codes))) if codes.size else 0
    _check_indices(codes, n)
    if n == 0:
        return set()
    return set((np.flatnonzero(order_mask(codes, n)) + 1).tolist())


def expressed_majority(leaves, n: int | None = None) -> set[int]:
    """Variables with at least as many positive as negated occurrences
    (and at least one positive occurrence)."""
    codes = _codes_array(leaves)
    if n is None:
        n = int(np.max(np.abs(codes))) if codes.size else 0
    _check_indices(codes, n)
    if n == 0:
        return set()
    return set((np.flatnonzero(majority_mask(codes, n)) + 1).tolist())


def expressed_count(problem: ProblemKind, leaves, w: np.ndarray) -> int:
    codes = _codes_array(leaves)
    n = len(w)
    _check_indices(codes, n)
    return int(np.count_nonzero(expressed_mask(problem, codes, n)))


def tree_stats(problem: ProblemKind, tree: SyntaxTree, w: np.ndarray) -> TreeStats:
    """Leaf count and expressed-variable count under the given problem."""
    return TreeStats(tree.leaf_count, expressed_count(problem, tree.leaf_codes, w))


# -- evaluation --------------------------------------------------------------


def evaluate_leaves(problem: ProblemKind, leaves, w: np.ndarray) -> float:
    """Score a raw inorder leaf-code sequence under the given problem."""
    codes = _codes_array(leaves)
    n = len(w)
    _check_indices(codes, n)
    mask = expressed_mask(problem, codes, n)
    if not problem.weighted:
        return float(np.count_nonzero(mask))
    return weight_sum(w, mask)


def evaluate(problem: ProblemKind, tree: SyntaxTree, w: np.ndarray) -> float:
    return evaluate_leaves(problem, tree.leaf_codes, w)


def mo_evaluate(problem: ProblemKind, tree: SyntaxTree, w: np.ndarray) -> MoFitness:
    """Both objectives at once: (score, node count)."""
    return MoFitness(evaluate_leaves(problem, tree.leaf_codes, w), tree.node_count)
