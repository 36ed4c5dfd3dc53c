"""Expression rules and scoring, cross-checked against straightforward
reference implementations."""

import numpy as np
import pytest

from gplab import (
    MoFitness,
    ProblemKind,
    SyntaxTree,
    evaluate,
    evaluate_leaves,
    expressed_count,
    expressed_majority,
    expressed_order,
    load_weights,
    make_rng,
    make_weights,
    mo_evaluate,
    tree_stats,
)
from gplab.fitness import validate_weights, weight_sum
from conftest import SAMPLE_CODES, SAMPLE_WEIGHTS


# -- reference implementations (kept deliberately naive) ------------------------

def ref_expressed_order(codes):
    seen, expressed = set(), set()
    for code in codes:
        var = abs(code)
        if var not in seen:
            seen.add(var)
            if code > 0:
                expressed.add(var)
    return expressed


def ref_expressed_majority(codes):
    from collections import Counter
    pos = Counter(c for c in codes if c > 0)
    neg = Counter(-c for c in codes if c < 0)
    return {v for v in pos if pos[v] >= neg.get(v, 0) and pos[v] >= 1}


def ref_value(problem, codes, w):
    expressed = (ref_expressed_order(codes) if problem.order_based
                 else ref_expressed_majority(codes))
    if not problem.weighted:
        return float(len(expressed))
    return float(sum(w[v - 1] for v in sorted(expressed)))


# -- worked example ---------------------------------------------------------------

def test_sample_expressed_sets():
    assert expressed_order(SAMPLE_CODES) == {1, 2}
    assert expressed_majority(SAMPLE_CODES) == {1, 2, 3, 4}


def test_sample_values(sample_tree):
    assert evaluate(ProblemKind.WORDER, sample_tree, SAMPLE_WEIGHTS) == 24.0
    assert evaluate(ProblemKind.WMAJORITY, sample_tree, SAMPLE_WEIGHTS) == 39.0
    assert mo_evaluate(ProblemKind.WORDER, sample_tree, SAMPLE_WEIGHTS) == MoFitness(24.0, 19)


def test_sample_unweighted_counts(sample_tree):
    assert evaluate(ProblemKind.ORDER, sample_tree, SAMPLE_WEIGHTS) == 2.0
    assert evaluate(ProblemKind.MAJORITY, sample_tree, SAMPLE_WEIGHTS) == 4.0


# -- expression rule edges ----------------------------------------------------------

def test_expressed_order_edges():
    assert expressed_order([]) == set()
    assert expressed_order([-1, 1]) == set()      # complement expressed first
    assert expressed_order([1, -1]) == {1}
    assert expressed_order([2]) == {2}


def test_expressed_majority_edges():
    assert expressed_majority([]) == set()
    assert expressed_majority([1, -1]) == {1}     # ties count as expressed
    assert expressed_majority([-1]) == set()
    assert expressed_majority([-1, -1, 1]) == set()


def test_empty_tree_scores_zero():
    for problem in ProblemKind:
        assert evaluate(ProblemKind(problem), SyntaxTree.empty(), SAMPLE_WEIGHTS) == 0.0


def test_single_leaf_unit():
    t = SyntaxTree.leaf(1)
    assert mo_evaluate(ProblemKind.ORDER, t, make_weights("unit", 3)) == MoFitness(1.0, 1)


def test_index_beyond_n_rejected():
    with pytest.raises(ValueError):
        evaluate_leaves(ProblemKind.ORDER, np.array([7]), make_weights("unit", 6))


# -- randomized cross-checks -----------------------------------------------------------

def test_matches_reference_implementations():
    rng = make_rng(4242)
    for _ in range(300):
        n = int(rng.integers(1, 9))
        w = validate_weights(rng.random(n) * 5 + 0.5)
        length = int(rng.integers(0, 41))
        codes = (rng.integers(1, n + 1, size=length)
                 * rng.choice([-1, 1], size=length)).astype(np.int64)
        assert expressed_order(codes, n) == ref_expressed_order(codes)
        assert expressed_majority(codes, n) == ref_expressed_majority(codes)
        for problem in ProblemKind:
            got = evaluate_leaves(problem, codes, w)
            assert got == pytest.approx(ref_value(problem, codes, w), abs=1e-12)
            upper = float(np.sum(w)) if problem.weighted else float(n)
            assert 0.0 <= got <= upper + 1e-12


def test_unweighted_equals_weighted_at_unit_weights():
    rng = make_rng(11)
    unit = make_weights("unit", 6)
    for _ in range(200):
        length = int(rng.integers(0, 30))
        codes = (rng.integers(1, 7, size=length)
                 * rng.choice([-1, 1], size=length)).astype(np.int64)
        assert evaluate_leaves(ProblemKind.ORDER, codes, unit) == \
            evaluate_leaves(ProblemKind.WORDER, codes, unit)
        assert evaluate_leaves(ProblemKind.MAJORITY, codes, unit) == \
            evaluate_leaves(ProblemKind.WMAJORITY, codes, unit)


def test_value_depends_only_on_leaf_sequence(rng):
    codes = [1, -4, 2, -1, -3, 2, 2]
    w = make_weights("pow2", 4)
    shapes = [SyntaxTree.from_codes(codes)] + \
        [SyntaxTree.from_codes(codes, rng=rng) for _ in range(5)]
    for problem in (ProblemKind.WORDER, ProblemKind.WMAJORITY):
        values = {evaluate(problem, t, w) for t in shapes}
        assert len(values) == 1


def test_majority_ignores_leaf_order(rng):
    w = make_weights("harmonic", 5)
    codes = np.array([1, -2, 2, 2, -5, 4, -4, -4, 1], dtype=np.int64)
    base = evaluate_leaves(ProblemKind.WMAJORITY, codes, w)
    for _ in range(10):
        shuffled = codes[rng.permutation(len(codes))]
        assert evaluate_leaves(ProblemKind.WMAJORITY, shuffled, w) == base


def test_expressed_sets_only_contain_positive_occurrences(rng):
    for _ in range(50):
        length = int(rng.integers(0, 25))
        codes = (rng.integers(1, 6, size=length)
                 * rng.choice([-1, 1], size=length)).astype(np.int64)
        present = {c for c in codes.tolist() if c > 0}
        assert expressed_order(codes, 5) <= present
        assert expressed_majority(codes, 5) <= present


def test_expressed_count_matches_sets():
    w = make_weights("unit", 6)
    assert expressed_count(ProblemKind.WORDER, np.array(SAMPLE_CODES), w) == 2
    assert expressed_count(ProblemKind.WMAJORITY, np.array(SAMPLE_CODES), w) == 4


def test_tree_stats(sample_tree):
    w = make_weights("unit", 6)
    stats = tree_stats(ProblemKind.WORDER, sample_tree, w)
    assert (stats.leaf_count, stats.expressed_count) == (10, 2)
    assert stats.complexity == 19
    assert stats.surplus == 8
    empty_stats = tree_stats(ProblemKind.MAJORITY, SyntaxTree.empty(), w)
    assert empty_stats.complexity == 0 and empty_stats.surplus == 0


# -- weights ------------------------------------------------------------------------------

def test_weight_families():
    assert list(make_weights("unit", 4)) == [1, 1, 1, 1]
    assert list(make_weights("pow2", 4)) == [8, 4, 2, 1]
    assert list(make_weights("harmonic", 3)) == [1.0, 0.5, 1.0 / 3.0]
    with pytest.raises(ValueError):
        make_weights("golden", 3)
    with pytest.raises(ValueError):
        make_weights("unit", 0)


def test_weight_validation():
    for bad in ([], [0.0], [1.0, -2.0], [np.nan], [np.inf, 1.0]):
        with pytest.raises(ValueError):
            validate_weights(bad)


def test_load_weights(tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("# heaviest first\n13\n11\n\n8\n")
    assert list(load_weights(path)) == [13.0, 11.0, 8.0]
    (tmp_path / "empty.txt").write_text("# nothing\n")
    with pytest.raises(ValueError):
        load_weights(tmp_path / "empty.txt")


def test_weight_sum_uses_index_order():
    w = validate_weights([0.1, 0.2, 0.7])
    mask = np.array([True, False, True])
    assert weight_sum(w, mask) == float(np.sum(w[mask]))
