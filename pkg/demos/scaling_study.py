"""A small end-to-end scaling study through the experiment harness.

Runs the parsimony hill-climber on the unit-weight order problem from
the empty tree over a grid of problem sizes, then asks the growth
fitter which law the means follow.  The full-size version of this study
is what the acceptance suite runs; this one finishes in seconds.

The raw CSV and summary JSON land in demo_output/ and are exactly what
the plotting frontend consumes.
"""

from pathlib import Path

from gplab import AlgorithmKind, ExperimentConfig, ProblemKind, run_suite

out_dir = Path(__file__).resolve().parent / "demo_output"
config = ExperimentConfig(
    problem=ProblemKind.ORDER,
    algo=AlgorithmKind.GP_SINGLE,
    n_grid=(16, 32, 64, 128),
    trials=50,
    budget=10 ** 7,
    master_seed=1,
    workers=2,
    out=out_dir / "scaling.csv",
)

summary, results = run_suite(config)

print(f"{'n':>5} {'mean':>10} {'median':>10} {'std':>9} {'success':>8}")
for cell in summary.cells:
    print(f"{cell.n:>5} {cell.mean_evaluations:>10.1f} {cell.median_evaluations:>10.1f} "
          f"{cell.std_evaluations:>9.1f} {cell.successes:>4}/{cell.trials}")

print()
print("growth-law ranking (ratio spread, 1.0 = perfectly proportional):")
for fit in summary.fits:
    print(f"  {fit.candidate:<22} spread {fit.ratio_spread:7.3f}  constant {fit.constant:9.3f}")
print()
print(f"best fit: {summary.best_fit}")
print(f"raw rows: {config.out}")
print(f"summary:  {config.out.with_suffix('.summary.json')}")
