"""Experiment orchestration: seeded trial suites over (n, T_init) grids,
aggregation, and growth-law fitting.

A suite is a grid of cells (problem size n crossed with initial-tree
size), each run for a fixed number of independent trials.  Trial seeds
are derived deterministically from the master seed plus the cell and
trial indices, so a config and a master seed determine every byte of
the raw output; workers only change wall time, never results.

Initial-tree sizes are specified in leaves (a tree with L leaves has
2L - 1 nodes) while results report T_init in nodes, matching how the
complexity objective is counted.
"""

from __future__ import annotations

import csv
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .evolve import (
    TRACE_HEADER,
    AlgorithmKind,
    SelectionRule,
    TrialResult,
    run_algorithm,
)
from .fitness import ProblemKind, load_weights, make_weights
from .tree import SyntaxTree
from .variation import make_rng, uniform_insert

CSV_HEADER = ("problem", "algo", "selection", "mode", "n", "t_init", "weight_family",
              "seed", "evaluations", "success", "max_tree_size", "final_pop_size")


class InitKind(Enum):
    EMPTY = "empty"
    RANDOM_TREE = "random"
    NON_REDUNDANT = "non_redundant"
    REDUNDANT_BLOWUP = "blowup"


def make_init(kind: InitKind, n: int, w: np.ndarray, rng: np.random.Generator,
              size: int | None = None) -> SyntaxTree:
    """Initial solution of the requested kind.

    ``size`` is the leaf count for random and blowup trees and the
    number of distinct variables m <= n for non-redundant ones (default
    m = n).  Random trees grow by ``size`` uniform insert operations
    from the empty tree; blowup trees scatter repeated or negated
    duplicates of a non-redundant core over the requested leaf count.
    """
    if kind is InitKind.EMPTY:
        return SyntaxTree.empty()
    if kind is InitKind.RANDOM_TREE:
        if size is None or size < 0:
            raise ValueError("random init needs a leaf count")
        tree = SyntaxTree.empty()
        for _ in range(size):
            tree = uniform_insert(tree, n, rng)
        return tree
    if kind is InitKind.NON_REDUNDANT:
        m = n if size is None else size
        if not 0 <= m <= n:
            raise ValueError(f"non-redundant init needs 0 <= m <= n, got m={m}")
        variables = rng.choice(n, size=m, replace=False) + 1
        return SyntaxTree.from_codes(variables, rng=rng)
    if kind is InitKind.REDUNDANT_BLOWUP:
        if size is None or size < 0:
            raise ValueError("blowup init needs a leaf count")
        core_m = min(n, size)
        core = rng.choice(n, size=core_m, replace=False) + 1
        pad = size - core_m
        if pad:
            duplicates = core[rng.integers(core_m, size=pad)]
            signs = rng.choice(np.array([-1, 1]), size=pad)
            codes = np.concatenate([core, duplicates * signs])
        else:
            codes = core
        codes = codes[rng.permutation(size)] if size else codes
        return SyntaxTree.from_codes(codes, rng=rng)
    raise ValueError(f"unknown init kind {kind!r}")


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything that determines a suite, and hence its output bytes."""

    problem: ProblemKind
    algo: AlgorithmKind
    n_grid: tuple[int, ...]
    selection: SelectionRule = SelectionRule.MO_PARSIMONY
    weight_family: str = "unit"          # family name or a weights-file path
    init_kind: InitKind = InitKind.EMPTY
    init_sizes: tuple[int | None, ...] = (None,)
    trials: int = 100
    budget: int = 10 ** 8
    master_seed: int = 1
    trace: bool = False
    workers: int = 1
    out: Path | None = None
    summary_out: Path | None = None
    trace_dir: Path | None = None

    def __post_init__(self):
        if self.trials < 1 or self.budget < 1:
            raise ValueError("trials and budget must be >= 1")
        if not self.n_grid or any(n < 1 for n in self.n_grid):
            raise ValueError("n grid values must be >= 1")
        if not self.init_sizes:
            raise ValueError("init_sizes must not be empty")
        if self.master_seed < 0:
            raise ValueError("master seed must be >= 0")

    @property
    def problem_label(self) -> str:
        return f"mo-{self.problem.value}"

    def weights_for(self, n: int) -> np.ndarray:
        if self.weight_family in ("unit", "harmonic", "pow2"):
            return make_weights(self.weight_family, n)
        w = load_weights(self.weight_family)
        if len(w) != n:
            raise ValueError(
                f"weights file {self.weight_family} has {len(w)} entries, expected n={n}")
        return w

    def cells(self) -> list[tuple[int, int | None]]:
        return [(n, size) for n in self.n_grid for size in self.init_sizes]


def derive_trial_seed(master_seed: int, cell_index: int, trial_index: int) -> int:
    """Deterministic, pairwise-distinct seed for one trial."""
    ss = np.random.SeedSequence([master_seed, cell_index, trial_index])
    return int(ss.generate_state(1, np.uint64)[0])


def run_trial(config: ExperimentConfig, n: int, init_size: int | None,
              seed: int) -> TrialResult:
    """One seeded trial: build weights and init, then run to the target."""
    w = config.weights_for(n)
    rng = make_rng(seed)
    init = make_init(config.init_kind, n, w, rng, init_size)
    return run_algorithm(config.algo, config.selection, config.problem, w,
                         init, config.budget, rng, seed=seed, trace=config.trace)


def _trial_task(args):
    config, n, init_size, seed = args
    return run_trial(config, n, init_size, seed)


def run_suite(config: ExperimentConfig):
    """All cells, all trials; returns (summary, results) and writes any
    configured output files."""
    tasks = []
    for cell_index, (n, init_size) in enumerate(config.cells()):
        for trial_index in range(config.trials):
            seed = derive_trial_seed(config.master_seed, cell_index, trial_index)
            tasks.append((config, n, init_size, seed))

    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            chunk = max(1, len(tasks) // (config.workers * 8))
            results = list(pool.map(_trial_task, tasks, chunksize=chunk))
    else:
        results = [_trial_task(t) for t in tasks]

    summary = summarize(config, results)
    if config.out is not None:
        write_results_csv(config.out, config, results)
        summary_path = config.summary_out or Path(config.out).with_suffix(".summary.json")
        write_summary_json(summary_path, summary)
    if config.trace_dir is not None and config.trace:
        write_traces(config.trace_dir, config, results)
    return summary, results


# -- aggregation --------------------------------------------------------------


@dataclass
class CellSummary:
    n: int
    init_size: int | None
    t_init: int
    trials: int
    successes: int
    success_rate: float
    mean_evaluations: float | None
    median_evaluations: float | None
    std_evaluations: float | None
    max_tree_size: int


@dataclass
class GrowthFit:
    candidate: str
    constant: float
    ratio_spread: float
    ratios: dict[str, float]


@dataclass
class SuiteSummary:
    problem: str
    algo: str
    selection: str
    mode: str
    weight_family: str
    trials: int
    budget: int
    master_seed: int
    cells: list[CellSummary] = field(default_factory=list)
    fits: list[GrowthFit] = field(default_factory=list)
    best_fit: str | None = None


def summarize(config: ExperimentConfig, results: list[TrialResult]) -> SuiteSummary:
    """Aggregate raw trial results; statistics cover successful trials
    only, with the success rate reported separately."""
    summary = SuiteSummary(
        problem=config.problem_label, algo=config.algo.value,
        selection=config.selection.value, mode=config.algo.mutation_mode.value,
        weight_family=str(config.weight_family), trials=config.trials,
        budget=config.budget, master_seed=config.master_seed)

    per_cell = len(results) // len(config.cells())
    means: dict[tuple[int, int], float] = {}
    for cell_index, (n, init_size) in enumerate(config.cells()):
        rows = results[cell_index * per_cell:(cell_index + 1) * per_cell]
        evals = np.array([r.evaluations for r in rows if r.success], dtype=float)
        cell = CellSummary(
            n=n, init_size=init_size, t_init=rows[0].t_init, trials=len(rows),
            successes=len(evals), success_rate=len(evals) / len(rows),
            mean_evaluations=float(np.mean(evals)) if len(evals) else None,
            median_evaluations=float(np.median(evals)) if len(evals) else None,
            std_evaluations=float(np.std(evals, ddof=1)) if len(evals) > 1 else None,
            max_tree_size=max(r.max_tree_size for r in rows))
        summary.cells.append(cell)
        if cell.mean_evaluations is not None:
            means[(n, cell.t_init)] = cell.mean_evaluations
    if len(means) >= 3:
        try:
            fits = fit_growth(means)
            summary.fits = fits
            if fits:
                summary.best_fit = fits[0].candidate
        except ValueError:
            pass
    return summary


# -- growth-law fitting --------------------------------------------------------

GROWTH_LAWS = {
    "n": lambda n, t: n,
    "n_log_n": lambda n, t: n * math.log(n),
    "n2": lambda n, t: n ** 2,
    "n2_log_n": lambda n, t: n ** 2 * math.log(n),
    "n3": lambda n, t: n ** 3,
    "t_init": lambda n, t: t,
    "n_t_init": lambda n, t: n * t,
    "t_init_plus_n_log_n": lambda n, t: t + n * math.log(n),
    "n_t_init_plus_n2_log_n": lambda n, t: n * t + n ** 2 * math.log(n),
}


def fit_growth(means, candidates=None) -> list[GrowthFit]:
    """Rank candidate growth laws against measured means.

    ``means`` maps n or (n, t_init) to a mean evaluation count (>= 3
    points required).  For each candidate g the report carries the
    per-point ratios mean/g, their max/min spread (1.0 is a perfect
    proportional fit) and the least-squares constant; the returned list
    is sorted best-first by spread.  Candidates that are not positive
    over the whole grid (e.g. t_init laws on an empty-init grid) are
    skipped unless explicitly requested, which is an error.
    """
    points = {}
    for key, value in means.items():
        n, t = key if isinstance(key, tuple) else (key, 0)
        points[(int(n), int(t))] = float(value)
    if len(points) < 3:
        raise ValueError("growth fitting needs at least 3 grid points")
    explicit = candidates is not None
    names = list(candidates) if explicit else list(GROWTH_LAWS)
    fits = []
    for name in names:
        if name not in GROWTH_LAWS:
            raise ValueError(f"unknown growth candidate {name!r}")
        g = GROWTH_LAWS[name]
        values = {key: g(*key) for key in points}
        if any(v <= 0 for v in values.values()):
            if explicit:
                raise ValueError(f"candidate {name!r} is not positive on this grid")
            continue
        ratios = {key: points[key] / values[key] for key in points}
        spread = max(ratios.values()) / min(ratios.values())
        constant = (sum(points[k] * values[k] for k in points)
                    / sum(v * v for v in values.values()))
        labeled = {f"n={k[0]},t_init={k[1]}": r for k, r in sorted(ratios.items())}
        fits.append(GrowthFit(name, constant, spread, labeled))
    fits.sort(key=lambda fit: (fit.ratio_spread, fit.candidate))
    return fits


# -- file output ----------------------------------------------------------------


def result_row(config: ExperimentConfig, r: TrialResult) -> tuple:
    return (config.problem_label, config.algo.value, config.selection.value,
            config.algo.mutation_mode.value, r.n, r.t_init,
            str(config.weight_family), r.seed, r.evaluations,
            int(r.success), r.max_tree_size, r.final_pop_size)


def write_results_csv(path, config: ExperimentConfig, results: list[TrialResult]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in results:
            writer.writerow(result_row(config, r))


def read_results_csv(path) -> list[dict]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != CSV_HEADER:
            raise ValueError(f"{path}: unexpected CSV header {reader.fieldnames}")
        rows = []
        for raw in reader:
            row = dict(raw)
            for col in ("n", "t_init", "seed", "evaluations", "max_tree_size", "final_pop_size"):
                row[col] = int(row[col])
            row["success"] = bool(int(row["success"]))
            rows.append(row)
    return rows


def means_from_rows(rows: list[dict]) -> dict[tuple[int, int], float]:
    """Per-(n, t_init) mean evaluations over successful rows."""
    groups: dict[tuple[int, int], list[int]] = {}
    for row in rows:
        if row["success"]:
            groups.setdefault((row["n"], row["t_init"]), []).append(row["evaluations"])
    return {key: float(np.mean(vals)) for key, vals in sorted(groups.items())}


def write_summary_json(path, summary: SuiteSummary) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(asdict(summary), fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_traces(trace_dir, config: ExperimentConfig, results: list[TrialResult]) -> None:
    trace_dir = Path(trace_dir)
    trace_dir.mkdir(parents=True, exist_ok=True)
    for r in results:
        if r.trace is None:
            continue
        name = f"trace_n{r.n}_t{r.t_init}_seed{r.seed}.csv"
        with open(trace_dir / name, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(TRACE_HEADER)
            for record in r.trace:
                writer.writerow(record)


def cpu_workers() -> int:
    return max(1, os.cpu_count() or 1)
