"""Front oracles, the brute-force enumerator, and non-redundancy."""

import numpy as np
import pytest

from gplab import (
    MoFitness,
    ProblemKind,
    SyntaxTree,
    brute_force_front,
    dominates,
    is_non_redundant,
    make_rng,
    make_weights,
    optimum_value,
    pareto_front,
    target_reached,
)
from gplab.evolve import Individual, Population
from conftest import SAMPLE_WEIGHTS


def as_set(front):
    return {(v.f_value, v.complexity) for v in front}


# -- optimum -----------------------------------------------------------------

def test_optimum_values():
    assert optimum_value(ProblemKind.WORDER, SAMPLE_WEIGHTS) == 47.0
    assert optimum_value(ProblemKind.WMAJORITY, SAMPLE_WEIGHTS) == 47.0
    assert optimum_value(ProblemKind.ORDER, SAMPLE_WEIGHTS) == 6.0
    assert optimum_value(ProblemKind.WORDER, np.array([5.0])) == 5.0
    for n in (1, 4, 9):
        assert optimum_value(ProblemKind.MAJORITY, make_weights("unit", n)) == n


# -- analytic front -------------------------------------------------------------

def test_front_for_sample_weights():
    front = pareto_front(ProblemKind.WORDER, SAMPLE_WEIGHTS)
    assert as_set(front) == {(0, 0), (13, 1), (24, 3), (32, 5), (39, 7), (44, 9), (47, 11)}


def test_front_unit_and_pow2():
    assert as_set(pareto_front(ProblemKind.ORDER, make_weights("unit", 3))) == \
        {(0, 0), (1, 1), (2, 3), (3, 5)}
    assert as_set(pareto_front(ProblemKind.WORDER, make_weights("pow2", 3))) == \
        {(0, 0), (4, 1), (6, 3), (7, 5)}
    assert as_set(pareto_front(ProblemKind.WMAJORITY, np.array([5.0]))) == \
        {(0, 0), (5, 1)}


def test_front_has_n_plus_1_vectors():
    rng = make_rng(1)
    for n in (1, 2, 5, 17):
        w = rng.random(n) + 0.5
        for problem in ProblemKind:
            assert len(pareto_front(problem, w)) == n + 1


def test_front_is_permutation_invariant():
    rng = make_rng(2)
    w = rng.random(7) * 10 + 1
    base = pareto_front(ProblemKind.WORDER, w)
    for _ in range(10):
        shuffled = w[rng.permutation(7)]
        assert pareto_front(ProblemKind.WORDER, shuffled) == base


def test_front_is_mutually_non_dominated():
    front = pareto_front(ProblemKind.WMAJORITY, SAMPLE_WEIGHTS)
    for a in front:
        for b in front:
            if a != b:
                assert not dominates(a, b)


def test_duplicate_weights_still_give_full_front():
    w = np.array([2.0, 2.0, 2.0, 1.0])
    front = pareto_front(ProblemKind.WORDER, w)
    assert as_set(front) == {(0, 0), (2, 1), (4, 3), (6, 5), (7, 7)}


# -- brute force ------------------------------------------------------------------

def test_brute_force_examples():
    got = brute_force_front(ProblemKind.WORDER, np.array([3.0, 1.0]), max_leaves=4)
    assert as_set(got) == {(0, 0), (3, 1), (4, 3)}
    got = brute_force_front(ProblemKind.WMAJORITY, np.array([5.0]), max_leaves=3)
    assert as_set(got) == {(0, 0), (5, 1)}


def test_brute_force_matches_analytic_front():
    rng = make_rng(3)
    for n in (1, 2):
        families = [make_weights("unit", n), make_weights("pow2", n),
                    rng.random(n) * 3 + 0.5]
        for w in families:
            for problem in (ProblemKind.WORDER, ProblemKind.WMAJORITY):
                assert brute_force_front(problem, w, n + 2) == pareto_front(problem, w)


def test_brute_force_refuses_large_inputs():
    with pytest.raises(ValueError):
        brute_force_front(ProblemKind.ORDER, make_weights("unit", 5), 3)
    with pytest.raises(ValueError):
        brute_force_front(ProblemKind.ORDER, make_weights("unit", 2), 9)


# -- non-redundancy ------------------------------------------------------------------

def test_non_redundancy_cases(sample_tree):
    w = SAMPLE_WEIGHTS
    assert is_non_redundant(SyntaxTree.empty(), ProblemKind.WORDER, w)
    assert is_non_redundant(SyntaxTree.leaf(1), ProblemKind.WORDER, w)
    assert not is_non_redundant(sample_tree, ProblemKind.WORDER, w)   # k=2, C=19
    assert not is_non_redundant(sample_tree, ProblemKind.WMAJORITY, w)  # k=4, C=19
    assert is_non_redundant(SyntaxTree.from_codes([5, 2, 4]), ProblemKind.WORDER, w)
    # a lone complement expresses nothing, so its node is redundant
    assert not is_non_redundant(SyntaxTree.leaf(-1), ProblemKind.WORDER, w)
    # ties express under majority but not under order
    pair = SyntaxTree.from_codes([-1, 1])
    assert not is_non_redundant(pair, ProblemKind.WORDER, w)
    assert not is_non_redundant(pair, ProblemKind.WMAJORITY, w)  # k=1, C=3


# -- target predicates ------------------------------------------------------------------

def test_multi_objective_target():
    w = make_weights("unit", 2)
    front = sorted(pareto_front(ProblemKind.ORDER, w), key=lambda v: v.complexity)
    trees = [SyntaxTree.empty(), SyntaxTree.leaf(1), SyntaxTree.from_codes([1, 2])]
    pop = Population(Individual(trees[0], front[0]))
    pop.members += [Individual(t, v) for t, v in zip(trees[1:], front[1:])]
    assert target_reached(True, pop, ProblemKind.ORDER, w)
    pop.members = pop.members[1:]  # drop the empty tree: (0, 0) missing
    assert not target_reached(True, pop, ProblemKind.ORDER, w)


def test_single_objective_target_ignores_complexity():
    w = make_weights("unit", 2)
    bloated = SyntaxTree.from_codes([1, 2, 2, 2, 1])  # F = 2 = optimum, C = 9
    ind = Individual(bloated, MoFitness(2.0, 9))
    assert target_reached(False, ind, ProblemKind.ORDER, w)
    assert not target_reached(False, ind, ProblemKind.ORDER, w,
                              require_non_redundant=True)
    lean = Individual(SyntaxTree.from_codes([1, 2]), MoFitness(2.0, 3))
    assert target_reached(False, lean, ProblemKind.ORDER, w,
                          require_non_redundant=True)
