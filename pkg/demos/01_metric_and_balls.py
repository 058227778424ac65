"""
Weights, distances and balls
============================

Points of the space are ``s x r`` matrices over ``Z_q``.  Each row is read as
a chain: it weighs the position of its last nonzero entry.
"""

import numpy as np

from nrtperfect import NrtMatrix, Params, ball_volume, distance, iter_ball, weight
from nrtperfect.enumeration import Space, weight_distribution

# two binary 3x2 matrices
x = NrtMatrix.from_rows(2, [[1, 0], [0, 1], [0, 0]])
y = NrtMatrix.from_rows(2, [[1, 1], [0, 1], [1, 0]])
print("x =", x.to_text(), " row weights", x.row_weights(), " weight", weight(x))
print("y =", y.to_text(), " row weights", y.row_weights(), " weight", weight(y))

# distance is the weight of the difference
print("d(x, y) =", distance(x, y), "  x - y =", (x - y).to_text())

# A row never gets heavier than its heaviest summand: the row metric is an ultrametric.
# Check it over every pair of length-4 ternary rows.
sp = Space(3, 1, 4)
w = sp.weights
sums = sp.add(np.arange(sp.size)[:, None], np.arange(sp.size)[None, :])
print("ultrametric holds:", bool((w[sums] <= np.maximum(w[:, None], w[None, :])).all()))

# Ball volumes come from convolving per-row weight counts.
p = Params(q=2, s=5, r=2, R=2)
dist = weight_distribution(p)
print("weight distribution of F_2^{5x2}:", dist.counts)
print("|B(2)| =", ball_volume(p), " q^{sr} =", p.space_size)

# 1024 is not a multiple of 26, so no 2-perfect code can tile this space.
print("divides:", p.space_size % ball_volume(p) == 0)

# The ball around x, listed in the deterministic iteration order.
for b in iter_ball(NrtMatrix.zeros(2, 3, 2), 1):
    print("  ", b.to_text())
