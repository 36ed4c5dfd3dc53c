"""One traced (1+1) hill-climber run with parsimony tie-breaking.

The run starts from a deliberately bloated tree: 12 distinct variables
are padded with duplicated and negated junk up to 120 leaves.  Accepted
steps shrink the tree (the surplus s - k of useless leaves never grows)
while insertions of missing variables push the score up.  A run counts
as successful the moment the score is optimal; here the stricter target
is requested, so the climb continues until the tree is non-redundant.
"""

from gplab import (
    AlgorithmKind,
    InitKind,
    ProblemKind,
    SelectionRule,
    make_init,
    make_rng,
    make_weights,
    run_algorithm,
)

n = 12
w = make_weights("pow2", n)
rng = make_rng(2024)
init = make_init(InitKind.REDUNDANT_BLOWUP, n, w, rng, 120)

result = run_algorithm(
    AlgorithmKind.GP_SINGLE, SelectionRule.MO_PARSIMONY, ProblemKind.WORDER,
    w, init, budget=10 ** 6, rng=rng, trace=True,
    require_non_redundant_target=True)

print(f"start: C = {init.node_count} nodes, success after "
      f"{result.evaluations} evaluations, max tree size {result.max_tree_size}")
print()
print("accepted steps (every 20th, plus first and last):")
print(f"{'iter':>8} {'F':>8} {'C':>6} {'s':>6} {'k':>4} {'s-k':>5}")
shown = {0, len(result.trace) - 1} | set(range(0, len(result.trace), 20))
for i, rec in enumerate(result.trace):
    if i in shown:
        print(f"{rec.iteration:>8} {rec.f_value:>8g} {rec.complexity:>6} "
              f"{rec.s:>6} {rec.k_expressed:>4} {rec.s_minus_k:>5}")

surpluses = [rec.s_minus_k for rec in result.trace]
print()
print("surplus monotone non-increasing:",
      all(b <= a for a, b in zip(surpluses, surpluses[1:])))
