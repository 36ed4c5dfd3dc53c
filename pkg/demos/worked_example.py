"""A first tour: build a tree, score it, and see the trade-off front.

The tree below has 10 leaves over n = 6 variables, with duplicates,
complements, and one variable (x1) whose complement appears only after
the positive occurrence.  Weights are attached heaviest-first.
"""

import numpy as np

from gplab import (
    ProblemKind,
    SyntaxTree,
    complexity,
    mo_evaluate,
    optimum_value,
    pareto_front,
)

codes = [1, -4, 2, -1, -3, -6, 4, 3, -5, 3]
weights = np.array([13.0, 11.0, 8.0, 7.0, 5.0, 3.0])

tree = SyntaxTree.from_codes(codes)
print("tree:", tree.to_text())
print("inorder leaves:", ", ".join(str(t) for t in tree.terminals()))
print("complexity C =", complexity(tree), "(2 * 10 leaves - 1)")
print()

# Under the order rule a variable only counts if its first occurrence is
# positive: ~x4 blocks x4 here, so only x1 and x2 score.  The majority
# rule counts occurrences instead, so x3 (2 vs 1) and x4 (1 vs 1, ties
# count) join in.
for problem in ProblemKind:
    f, c = mo_evaluate(problem, tree, weights)
    print(f"{problem.value:10s} -> (F, C) = ({f:g}, {c})")
print()

print("optimum F =", optimum_value(ProblemKind.WORDER, weights), "(every weight once)")
front = sorted(pareto_front(ProblemKind.WORDER, weights), key=lambda v: v.complexity)
print("optimal trade-offs (F, C):", [(v.f_value, v.complexity) for v in front])
print()
print("round trip through text:", SyntaxTree.from_text(tree.to_text()) == tree)
