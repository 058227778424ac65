"""
When do two balls meet?
=======================

``B(x, R)`` and ``B(x', R)`` intersect exactly when the rows of ``x - x'``
split into two groups each of weight at most ``R``.  Finding the split is a
0-1 knapsack with values equal to weights.
"""

from nrtperfect import NrtMatrix, balls_intersect, is_decomposable, knapsack_max

# Three rows e_2 in F_2^{3x2}: total weight 6, radius 3.
x = NrtMatrix.from_rows(2, [[0, 1], [0, 1], [0, 1]])
zero = NrtMatrix.zeros(2, 3, 2)
print("w(x) =", x.weight())

# 6 <= 2 * 3, yet the balls are disjoint: no subset of {2, 2, 2} sums to 3.
sol = knapsack_max(x.row_weights(), 3)
print("best packing under capacity 3:", sol.best_value, "rows", sorted(sol.chosen))
print("leftover:", x.weight() - sol.best_value, "> 3, so", is_decomposable(x, 3))
print("B(x,3) meets B(3):", balls_intersect(x, zero, 3))

# Change one row to e_1 and a split appears.
x2 = NrtMatrix.from_rows(2, [[1, 0], [0, 1], [0, 1]])
part = is_decomposable(x2, 3)
print("row weights 1, 2, 2 at radius 3: I =", sorted(part.I), "J =", sorted(part.J), "(0-based rows)")

# The numerical distance alone does not decide intersection.
for R in (2, 3, 4):
    print(f"R={R}: w(x)={x.weight()} <= 2R={2 * R}? {x.weight() <= 2 * R}; intersect? "
          f"{balls_intersect(x, zero, R)}")
