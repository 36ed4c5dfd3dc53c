"""Hill-climber and archive-based optimizer over the two objectives.

Two algorithm families share the mutation operator:

* the (1+1) hill-climber keeps a single individual and replaces it
  whenever the offspring is favored, under one of two rules: plain
  score comparison (accept iff F does not drop), or the parsimony rule
  (accept iff F strictly improves, or F ties and complexity does not
  grow);
* the archive optimizer keeps every trade-off seen so far: each step
  mutates a uniformly chosen member, and the offspring enters unless
  some member strictly dominates it, evicting everything it weakly
  dominates (including an equal-vector incumbent).

Runs are measured in fitness evaluations.  The initial solution costs
one evaluation and the reported optimization time includes it, so
evaluations consumed always equals iterations + 1.  Termination is
decided by the oracle predicates, never by the algorithms themselves;
exhausting the budget flags the trial unsuccessful rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np

from .fitness import MoFitness, ProblemKind, evaluate_leaves, tree_stats
from .oracle import is_non_redundant, optimum_value, pareto_front
from .tree import SyntaxTree
from .variation import MutationMode, mutate


class SelectionRule(Enum):
    """Offspring-acceptance rules for the (1+1) hill-climber."""

    F_ONLY = "f_only"
    MO_PARSIMONY = "mo_parsimony"


class AlgorithmKind(Enum):
    GP_SINGLE = "gp_single"
    GP_MULTI = "gp_multi"
    SMOGP_SINGLE = "smogp_single"
    SMOGP_MULTI = "smogp_multi"

    @property
    def multi_objective(self) -> bool:
        return self in (AlgorithmKind.SMOGP_SINGLE, AlgorithmKind.SMOGP_MULTI)

    @property
    def mutation_mode(self) -> MutationMode:
        if self in (AlgorithmKind.GP_SINGLE, AlgorithmKind.SMOGP_SINGLE):
            return MutationMode.SINGLE
        return MutationMode.MULTI


def favors(rule: SelectionRule, y: MoFitness, x: MoFitness) -> bool:
    """True iff offspring y replaces incumbent x under the rule.

    Comparisons are exact; all scores come out of the one shared
    summation procedure, so no tolerance is needed or wanted.
    """
    if rule is SelectionRule.F_ONLY:
        return y.f_value >= x.f_value
    return y.f_value > x.f_value or (
        y.f_value == x.f_value and y.complexity <= x.complexity)


def weakly_dominates(y: MoFitness, x: MoFitness) -> bool:
    """y is at least as good in both objectives (reflexive)."""
    return y.f_value >= x.f_value and y.complexity <= x.complexity


def dominates(y: MoFitness, x: MoFitness) -> bool:
    """y weakly dominates x and is strictly better somewhere."""
    return (y.f_value >= x.f_value and y.complexity <= x.complexity
            and (y.f_value > x.f_value or y.complexity < x.complexity))


@dataclass(slots=True)
class Individual:
    """A tree with its cached objective pair."""

    tree: SyntaxTree
    fitness: MoFitness


def make_individual(tree: SyntaxTree, problem: ProblemKind, w: np.ndarray) -> Individual:
    f = evaluate_leaves(problem, tree.leaf_codes, w)
    return Individual(tree, MoFitness(f, tree.node_count))


class Population:
    """The archive P: mutually non-dominated individuals, at most one
    per objective vector."""

    def __init__(self, initial: Individual):
        self.members: list[Individual] = [initial]

    def __len__(self) -> int:
        return len(self.members)

    def pick(self, rng: np.random.Generator) -> Individual:
        return self.members[int(rng.integers(len(self.members)))]

    def consider(self, candidate: Individual) -> bool:
        """Archive update for one offspring; True iff it was inserted.

        The candidate enters unless a member strictly dominates it;
        on entry every member it weakly dominates is evicted, so an
        equal-vector incumbent is replaced by the newcomer.
        """
        cf = candidate.fitness
        for member in self.members:
            if dominates(member.fitness, cf):
                return False
        self.members = [m for m in self.members if not weakly_dominates(cf, m.fitness)]
        self.members.append(candidate)
        return True

    def vectors(self) -> set[MoFitness]:
        return {m.fitness for m in self.members}

    def max_complexity(self) -> int:
        return max(m.fitness.complexity for m in self.members)

    def audit(self, max_size: int | None = None) -> None:
        """Assert pairwise mutual non-domination (and a size bound)."""
        if max_size is not None and len(self.members) > max_size:
            raise AssertionError(
                f"population size {len(self.members)} exceeds bound {max_size}")
        vecs = [m.fitness for m in self.members]
        if len(set(vecs)) != len(vecs):
            raise AssertionError("duplicate objective vector in archive")
        for i, a in enumerate(vecs):
            for b in vecs[i + 1:]:
                if weakly_dominates(a, b) or weakly_dominates(b, a):
                    raise AssertionError(f"archive members {a} and {b} are comparable")


class StepDiagnostics(NamedTuple):
    """Sizes behind the bloat argument: leaves s, expressed k, s - k."""

    s: int
    k_expressed: int
    s_minus_k: int


class TraceRecord(NamedTuple):
    """One accepted hill-climber state (iteration 0 is the initial one)."""

    iteration: int
    f_value: float
    complexity: int
    s: int
    k_expressed: int

    @property
    def s_minus_k(self) -> int:
        return self.s - self.k_expressed


TRACE_HEADER = ("iteration", "f_value", "complexity", "s", "k_expressed")


def diagnostics(tree: SyntaxTree, problem: ProblemKind, w: np.ndarray) -> StepDiagnostics:
    stats = tree_stats(problem, tree, w)
    return StepDiagnostics(stats.leaf_count, stats.expressed_count, stats.surplus)


@dataclass(slots=True)
class TrialResult:
    """Outcome of one seeded run."""

    n: int
    t_init: int                      # node count of the initial tree
    seed: int | None
    evaluations: int                 # until first success, or budget if none
    success: bool
    max_tree_size: int               # largest retained solution, in nodes
    final_pop_size: int
    trace: list[TraceRecord] | None = field(default=None, repr=False)


def one_plus_one_step(current: Individual, rule: SelectionRule, mode: MutationMode,
                      problem: ProblemKind, w: np.ndarray,
                      rng: np.random.Generator) -> Individual:
    """One mutate-evaluate-select step; exactly one evaluation."""
    offspring_tree, _ = mutate(current.tree, len(w), mode, rng)
    offspring = make_individual(offspring_tree, problem, w)
    return offspring if favors(rule, offspring.fitness, current.fitness) else current


def smo_gp_step(pop: Population, mode: MutationMode, problem: ProblemKind,
                w: np.ndarray, rng: np.random.Generator) -> Population:
    """One archive step: uniform parent, one offspring, one evaluation."""
    parent = pop.pick(rng)
    offspring_tree, _ = mutate(parent.tree, len(w), mode, rng)
    pop.consider(make_individual(offspring_tree, problem, w))
    return pop


def run_algorithm(algo: AlgorithmKind, selection: SelectionRule, problem: ProblemKind,
                  w: np.ndarray, init: SyntaxTree, budget: int,
                  rng: np.random.Generator, *, seed: int | None = None,
                  trace: bool = False, audit_archive: bool = False,
                  audit_non_redundant: bool = False,
                  require_non_redundant_target: bool = False) -> TrialResult:
    """Run one algorithm until the oracle target or budget exhaustion.

    The selection rule only applies to the hill-climbers; archive runs
    ignore it.  Tracing records accepted hill-climber states (archive
    runs have no single trajectory to trace).  Optional audits re-check
    the archive invariants after every step (expensive) or assert that
    no redundant solution is ever inserted (cheap); both raise
    AssertionError on violation.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    n = len(w)
    mode = algo.mutation_mode
    t_init = init.node_count
    current = make_individual(init, problem, w)
    evaluations = 1
    max_size = t_init
    records: list[TraceRecord] | None = None

    if algo.multi_objective:
        front = pareto_front(problem, w)
        pop = Population(current)
        if audit_non_redundant and not is_non_redundant(init, problem, w):
            raise AssertionError("redundant initial solution entered the archive")
        # the n+1 size bound is provable for unweighted problems, and for
        # weighted ones under single-step mutation from a non-redundant start
        size_bound = None
        if audit_archive and (not problem.weighted or (
                mode is MutationMode.SINGLE and is_non_redundant(init, problem, w))):
            size_bound = n + 1
        covered = {current.fitness} & front
        success = len(covered) == len(front)
        while not success and evaluations < budget:
            parent = pop.pick(rng)
            offspring_tree, _ = mutate(parent.tree, n, mode, rng)
            offspring = make_individual(offspring_tree, problem, w)
            evaluations += 1
            if pop.consider(offspring):
                if offspring.fitness.complexity > max_size:
                    max_size = offspring.fitness.complexity
                if audit_non_redundant and not is_non_redundant(offspring_tree, problem, w):
                    raise AssertionError("redundant solution entered the archive")
                if offspring.fitness in front:
                    covered.add(offspring.fitness)
                    success = len(covered) == len(front)
            if audit_archive:
                pop.audit(max_size=size_bound)
        return TrialResult(n, t_init, seed, evaluations, success,
                           max_size, len(pop), None)

    # (1+1) hill-climber
    optimum = optimum_value(problem, w)
    if trace:
        d = diagnostics(init, problem, w)
        records = [TraceRecord(0, current.fitness.f_value, current.fitness.complexity,
                               d.s, d.k_expressed)]

    def reached(ind: Individual) -> bool:
        if ind.fitness.f_value != optimum:
            return False
        if require_non_redundant_target:
            return is_non_redundant(ind.tree, problem, w)
        return True

    success = reached(current)
    iteration = 0
    while not success and evaluations < budget:
        iteration += 1
        offspring_tree, _ = mutate(current.tree, n, mode, rng)
        offspring = make_individual(offspring_tree, problem, w)
        evaluations += 1
        if favors(selection, offspring.fitness, current.fitness):
            current = offspring
            if current.fitness.complexity > max_size:
                max_size = current.fitness.complexity
            if records is not None:
                d = diagnostics(current.tree, problem, w)
                records.append(TraceRecord(iteration, current.fitness.f_value,
                                           current.fitness.complexity, d.s, d.k_expressed))
            success = reached(current)
    return TrialResult(n, t_init, seed, evaluations, success,
                       max_size, 1, records)
