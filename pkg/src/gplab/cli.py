"""Command-line front door: run suites, fit growth laws, print fronts,
and self-validate the oracles.

``run`` accepts every option either as a flag or as a ``key = value``
line in a config file (flags win).  Exit status is 0 on success and
nonzero with a message on bad input or failed validation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

import numpy as np

from . import evolve, oracle, tree
from .evolve import AlgorithmKind, SelectionRule
from .fitness import (
    ProblemKind,
    evaluate_leaves,
    load_weights,
    make_weights,
)
from .harness import (
    ExperimentConfig,
    InitKind,
    fit_growth,
    means_from_rows,
    read_results_csv,
    run_suite,
)
from .variation import hvl_prime, make_rng


def parse_problem(text: str) -> ProblemKind:
    name = text.strip().lower().replace("-", "_")
    if name.startswith("mo_"):
        name = name[3:]
    try:
        return ProblemKind(name)
    except ValueError:
        raise SystemExit(f"unknown problem {text!r}; use e.g. mo-order or worder")


def parse_algo(text: str) -> AlgorithmKind:
    name = text.strip().lower().replace("-", "_")
    try:
        return AlgorithmKind(name)
    except ValueError:
        raise SystemExit(f"unknown algorithm {text!r}; one of "
                         + ", ".join(a.value.replace("_", "-") for a in AlgorithmKind))


def parse_selection(text: str) -> SelectionRule:
    name = text.strip().lower().replace("-", "_")
    try:
        return SelectionRule(name)
    except ValueError:
        raise SystemExit(f"unknown selection rule {text!r}; f-only or mo-parsimony")


def parse_init(text: str) -> InitKind:
    name = text.strip().lower().replace("-", "_")
    aliases = {"random_tree": "random", "redundant_blowup": "blowup"}
    name = aliases.get(name, name)
    try:
        return InitKind(name)
    except ValueError:
        raise SystemExit(f"unknown init kind {text!r}; one of "
                         + ", ".join(k.value for k in InitKind))


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in str(text).split(",") if part.strip())
    except ValueError:
        raise SystemExit(f"expected a comma-separated integer list, got {text!r}")


def read_config_file(path) -> dict[str, str]:
    """Flat ``key = value`` text mirroring the CLI flags."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SystemExit(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip().lower().replace("_", "-")] = value.strip()
    return values


def weights_for(spec: str, n: int) -> np.ndarray:
    if spec in ("unit", "harmonic", "pow2"):
        return make_weights(spec, n)
    return load_weights(spec)


RUN_DEFAULTS = {
    "problem": "mo-order",
    "algo": "gp-single",
    "selection": "mo-parsimony",
    "weights": "unit",
    "init": "empty",
    "trials": "100",
    "budget": str(10 ** 8),
    "seed": "1",
    "workers": "1",
}


def build_run_config(args) -> ExperimentConfig:
    file_values = read_config_file(args.config) if args.config else {}

    def pick(key: str, flag_value):
        if flag_value is not None:
            return flag_value
        if key in file_values:
            return file_values[key]
        return RUN_DEFAULTS.get(key)

    n_value = pick("n", args.n)
    if n_value is None:
        raise SystemExit("run needs --n (or an 'n = ...' config line)")
    out_value = pick("out", args.out)
    init_kind = parse_init(pick("init", args.init))
    init_leaves = pick("init-leaves", args.init_leaves)
    init_m = pick("init-m", args.init_m)
    if init_kind in (InitKind.RANDOM_TREE, InitKind.REDUNDANT_BLOWUP):
        if init_leaves is None:
            raise SystemExit(f"init kind {init_kind.value} needs --init-leaves")
        init_sizes = parse_int_list(init_leaves)
    elif init_kind is InitKind.NON_REDUNDANT and init_m is not None:
        init_sizes = parse_int_list(init_m)
    else:
        init_sizes = (None,)
    trace_dir = pick("trace-dir", args.trace_dir)
    trace = bool(args.trace) or trace_dir is not None or \
        str(pick("trace", None)).lower() in ("1", "true", "yes")

    return ExperimentConfig(
        problem=parse_problem(pick("problem", args.problem)),
        algo=parse_algo(pick("algo", args.algo)),
        selection=parse_selection(pick("selection", args.selection)),
        weight_family=pick("weights", args.weights),
        n_grid=parse_int_list(n_value),
        init_kind=init_kind,
        init_sizes=init_sizes,
        trials=int(pick("trials", args.trials)),
        budget=int(pick("budget", args.budget)),
        master_seed=int(pick("seed", args.seed)),
        trace=trace,
        workers=int(pick("workers", args.workers)),
        out=Path(out_value) if out_value else None,
        summary_out=Path(args.summary_out) if args.summary_out else None,
        trace_dir=Path(trace_dir) if trace_dir else None,
    )


def cmd_run(args) -> int:
    config = build_run_config(args)
    summary, _ = run_suite(config)
    for cell in summary.cells:
        mean = "-" if cell.mean_evaluations is None else f"{cell.mean_evaluations:.1f}"
        print(f"n={cell.n} t_init={cell.t_init}: success {cell.successes}/{cell.trials}, "
              f"mean evaluations {mean}")
    if summary.best_fit:
        print(f"best growth fit: {summary.best_fit}")
    if config.out is not None:
        print(f"raw results: {config.out}")
    return 0


def cmd_fit(args) -> int:
    rows = read_results_csv(args.csv)
    means = means_from_rows(rows)
    candidates = [c.strip().replace("-", "_") for c in args.candidates.split(",")] \
        if args.candidates else None
    try:
        fits = fit_growth(means, candidates)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    print(json.dumps({"best": fits[0].candidate if fits else None,
                      "fits": [asdict(f) for f in fits]}, indent=2))
    return 0


def format_front(front) -> str:
    def fmt(value: float) -> str:
        return str(int(value)) if float(value).is_integer() else repr(value)

    ordered = sorted(front, key=lambda v: v.complexity)
    return "{" + ",".join(f"({fmt(v.f_value)},{v.complexity})" for v in ordered) + "}"


def cmd_front(args) -> int:
    problem = parse_problem(args.problem)
    w = weights_for(args.weights, args.n)
    if args.n != len(w):
        print(f"error: weights file holds {len(w)} entries, got --n {args.n}",
              file=sys.stderr)
        return 1
    print(format_front(oracle.pareto_front(problem, w)))
    return 0


# -- self-validation -------------------------------------------------------------


def validation_checks(n_max: int, seed: int):
    """Oracle-equivalence and invariant battery; yields (name, ok)."""
    rng = make_rng(seed)
    for n in range(1, n_max + 1):
        families = {
            "unit": make_weights("unit", n),
            "pow2": make_weights("pow2", n),
            "random": np.sort(rng.random(n) * 9 + 1)[::-1].copy(),
        }
        for family, w in families.items():
            for problem in (ProblemKind.WORDER, ProblemKind.WMAJORITY):
                analytic = oracle.pareto_front(problem, w)
                brute = oracle.brute_force_front(problem, w, n + 2)
                yield (f"front equivalence {problem.value} n={n} {family}",
                       analytic == brute)
            front = oracle.pareto_front(ProblemKind.WORDER, w)
            yield (f"front size n={n} {family}", len(front) == n + 1)
            yield (f"front mutually non-dominated n={n} {family}",
                   all(not evolve.dominates(a, b)
                       for a in front for b in front if a != b))
            shuffled = w[rng.permutation(n)]
            yield (f"front permutation invariance n={n} {family}",
                   oracle.pareto_front(ProblemKind.WORDER, shuffled) == front)

    ok = True
    current = tree.SyntaxTree.empty()
    for _ in range(300):
        current = hvl_prime(current, 4, rng)
        expected = 0 if current.is_empty else 2 * current.leaf_count - 1
        if current.node_count != expected:
            ok = False
        try:
            current.validate()
        except AssertionError:
            ok = False
    yield ("tree invariants under 300 random operator steps", ok)

    ok = True
    for _ in range(200):
        vecs = [evolve.MoFitness(float(rng.integers(5)), int(rng.integers(5)))
                for _ in range(3)]
        a, b, c = vecs
        if evolve.dominates(a, a):
            ok = False
        if evolve.dominates(a, b) and evolve.dominates(b, c) and not evolve.dominates(a, c):
            ok = False
        if evolve.dominates(a, b) and not evolve.weakly_dominates(a, b):
            ok = False
    yield ("dominance is a strict partial order (sampled)", ok)

    ok = True
    unit = make_weights("unit", 5)
    for _ in range(100):
        length = int(rng.integers(0, 12))
        codes = (rng.integers(1, 6, size=length) * rng.choice([-1, 1], size=length)).astype(np.int64)
        if evaluate_leaves(ProblemKind.ORDER, codes, unit) != \
                evaluate_leaves(ProblemKind.WORDER, codes, unit):
            ok = False
        if evaluate_leaves(ProblemKind.MAJORITY, codes, unit) != \
                evaluate_leaves(ProblemKind.WMAJORITY, codes, unit):
            ok = False
    yield ("unweighted kinds equal weighted kinds at unit weights", ok)


def cmd_validate(args) -> int:
    failures = 0
    for name, ok in validation_checks(args.n, args.seed):
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
        if not ok:
            failures += 1
    if failures:
        print(f"{failures} check(s) failed", file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gplab")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a trial suite")
    run.add_argument("--config", help="config file with key = value lines")
    run.add_argument("--problem")
    run.add_argument("--algo")
    run.add_argument("--selection")
    run.add_argument("--weights")
    run.add_argument("--n", help="comma-separated problem sizes")
    run.add_argument("--init")
    run.add_argument("--init-leaves", help="comma-separated leaf counts")
    run.add_argument("--init-m", help="variable counts for non-redundant inits")
    run.add_argument("--trials")
    run.add_argument("--budget")
    run.add_argument("--seed")
    run.add_argument("--workers")
    run.add_argument("--out")
    run.add_argument("--summary-out")
    run.add_argument("--trace", action="store_true")
    run.add_argument("--trace-dir")
    run.set_defaults(func=cmd_run)

    fit = sub.add_parser("fit", help="growth fitting on an existing results CSV")
    fit.add_argument("--csv", required=True)
    fit.add_argument("--candidates")
    fit.set_defaults(func=cmd_fit)

    front = sub.add_parser("front", help="print the optimal trade-off front")
    front.add_argument("--problem", required=True)
    front.add_argument("--weights", default="unit")
    front.add_argument("--n", type=int, required=True)
    front.set_defaults(func=cmd_front)

    validate = sub.add_parser("validate", help="run oracle equivalence checks")
    validate.add_argument("--n", type=int, default=3)
    validate.add_argument("--seed", type=int, default=7)
    validate.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
