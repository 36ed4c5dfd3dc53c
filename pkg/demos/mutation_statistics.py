"""What the mutation operator actually does, measured.

One operator application chooses substitute / insert / delete uniformly;
multi-step mutation applies it 1 + Poisson(1) times.  Both claims are
checked here by sampling.
"""

import math
from collections import Counter

import numpy as np

from gplab import MutationMode, SyntaxTree, hvl_prime, make_rng, sample_k

rng = make_rng(7)
samples = 200_000

# Operation mix, read off the node-count change on a single-leaf tree:
# delete empties it, substitute keeps one node, insert makes three.
leaf = SyntaxTree.leaf(1)
names = {0: "delete", 1: "substitute", 3: "insert"}
counts = Counter(names[hvl_prime(leaf, 5, rng).node_count] for _ in range(samples))
print(f"operation frequencies over {samples:,} draws (expect 1/3 each):")
for name in ("substitute", "insert", "delete"):
    print(f"  {name:10s} {counts[name] / samples:.4f}")
print()

# Steps per mutation in multi mode.
ks = np.fromiter((sample_k(MutationMode.MULTI, rng) for _ in range(samples)),
                 dtype=np.int64, count=samples)
print(f"multi-mode step count: mean {ks.mean():.4f} (expect 2.0), "
      f"P(k=1) {np.mean(ks == 1):.4f} (expect e^-1 = {math.exp(-1):.4f})")
print("histogram:")
for k in range(1, 8):
    share = np.mean(ks == k)
    print(f"  k={k}: {share:.4f} {'#' * int(300 * share)}")
