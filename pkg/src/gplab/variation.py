"""The HVL-Prime mutation operator and its step-count regimes.

One application of the operator picks substitute, insert or delete with
probability 1/3 each and applies it with uniform random choices:

* substitute: a uniform random leaf is replaced by a terminal drawn
  uniformly from all 2n terminals (the current one is not excluded);
* insert: a uniform random node v (leaf or join) is replaced by a join
  of v and a fresh uniform terminal, child order uniform;
* delete: a uniform random leaf is removed, its sibling replacing the
  parent join.

On the empty tree, insert creates a single leaf while substitute and
delete return the tree unchanged (a wasted offspring that still costs
one evaluation).

Randomness comes from a seeded numpy PCG64 generator; the draw order
inside each operation is fixed, so one seed replays one trajectory on
any platform.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .tree import SyntaxTree, delete_leaf, insert_at, substitute_leaf


class MutationMode(Enum):
    """How many HVL-Prime applications one mutation performs."""

    SINGLE = "single"   # exactly one
    MULTI = "multi"     # 1 + Poisson(1) many


def make_rng(seed: int) -> np.random.Generator:
    """The project-wide random source: PCG64 under the given seed."""
    return np.random.Generator(np.random.PCG64(seed))


def sample_k(mode: MutationMode, rng: np.random.Generator) -> int:
    """Number of operator applications for one mutation.

    Single mode is always 1 and consumes no draws.  Multi mode draws
    1 + Poisson(1) by inversion with sequential search, consuming
    exactly one uniform, so trajectories replay identically everywhere.
    """
    if mode is MutationMode.SINGLE:
        return 1
    u = rng.random()
    k = 0
    p = math.exp(-1.0)
    cumulative = p
    while u > cumulative and k < 512:
        k += 1
        p /= k
        cumulative += p
    return 1 + k


def _draw_terminal(n: int, rng: np.random.Generator) -> int:
    t = int(rng.integers(2 * n))
    code = t // 2 + 1
    return code if t % 2 == 0 else -code


def uniform_insert(tree: SyntaxTree, n: int, rng: np.random.Generator) -> SyntaxTree:
    """The insert branch on its own: uniform node, terminal and child
    order.  Also used to grow random initial trees one leaf at a time."""
    if tree.is_empty:
        return SyntaxTree.leaf(_draw_terminal(n, rng))
    position = int(rng.integers(tree.node_count))
    code = _draw_terminal(n, rng)
    side = "left" if int(rng.integers(2)) == 0 else "right"
    return insert_at(tree, position, code, side)


def hvl_prime(tree: SyntaxTree, n: int, rng: np.random.Generator) -> SyntaxTree:
    """One uniform substitute / insert / delete step on the tree."""
    op = int(rng.integers(3))
    if op == 0:  # substitute
        if tree.is_empty:
            return tree
        position = int(rng.integers(tree.leaf_count))
        return substitute_leaf(tree, position, _draw_terminal(n, rng))
    if op == 1:
        return uniform_insert(tree, n, rng)
    # delete
    if tree.is_empty:
        return tree
    return delete_leaf(tree, int(rng.integers(tree.leaf_count)))


def mutate(tree: SyntaxTree, n: int, mode: MutationMode,
           rng: np.random.Generator) -> tuple[SyntaxTree, int]:
    """Apply HVL-Prime k times in sequence; returns (offspring, k)."""
    k = sample_k(mode, rng)
    for _ in range(k):
        tree = hvl_prime(tree, n, rng)
    return tree, k
