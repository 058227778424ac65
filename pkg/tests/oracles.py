"""Independent brute-force oracles shared by the test modules.

Nothing here calls the knapsack solver, the weight-profile ball iterator or
the integer-indexed Space; each oracle recomputes from the definitions.
"""

from itertools import product

from nrtperfect.core import NrtMatrix


def brute_row_weight(row):
    return max([j + 1 for j, e in enumerate(row) if e != 0], default=0)


def brute_weight(rows):
    return sum(brute_row_weight(row) for row in rows)


def all_matrices(q, s, r):
    for digits in product(range(q), repeat=s * r):
        yield tuple(tuple(digits[i * r:(i + 1) * r]) for i in range(s))


def brute_ball(q, center, R):
    """Ball as a set of row tuples, by filtering the whole space."""
    s, r = len(center), len(center[0])
    out = set()
    for y in all_matrices(q, s, r):
        diff = tuple(tuple((a - b) % q for a, b in zip(ra, rb)) for ra, rb in zip(center, y))
        if brute_weight(diff) <= R:
            out.add(y)
    return out


def brute_decomposable(profile, R):
    """Try all 2^s splits of the rows."""
    s = len(profile)
    for mask in range(1 << s):
        a = sum(profile[i] for i in range(s) if mask >> i & 1)
        b = sum(profile[i] for i in range(s) if not mask >> i & 1)
        if a <= R and b <= R:
            return True
    return False


def brute_knapsack_best(weights, capacity):
    best = 0
    for mask in range(1 << len(weights)):
        total = sum(w for i, w in enumerate(weights) if mask >> i & 1)
        if total <= capacity:
            best = max(best, total)
    return best


def mat(q, rows):
    return NrtMatrix.from_rows(q, rows)
