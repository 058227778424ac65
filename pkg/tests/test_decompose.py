import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nrtperfect.core import NrtMatrix, canonical_row
from nrtperfect.decompose import (
    Partition,
    balls_intersect,
    decompose_profile,
    decomposable_many,
    is_decomposable,
    knapsack_max,
)

from oracles import brute_ball, brute_decomposable, brute_knapsack_best, mat


def test_knapsack_examples():
    sol = knapsack_max([2, 2, 2], 3)
    assert sol.best_value == 2 and sol.chosen == frozenset({0})
    sol = knapsack_max([1, 2, 3], 4)
    assert sol.best_value == 4 and sol.chosen == frozenset({0, 2})
    assert knapsack_max([], 5).best_value == 0
    assert knapsack_max([7], 3).chosen == frozenset()


def test_knapsack_rejects_bad_input():
    with pytest.raises(ValueError):
        knapsack_max([1], -1)
    with pytest.raises(ValueError):
        knapsack_max([-1], 2)


@settings(max_examples=300)
@given(st.lists(st.integers(0, 9), max_size=9), st.integers(0, 20))
def test_knapsack_optimal_and_witnessed(weights, capacity):
    sol = knapsack_max(weights, capacity)
    assert sol.best_value == brute_knapsack_best(weights, capacity)
    assert sum(weights[i] for i in sol.chosen) == sol.best_value


def test_decompose_examples():
    assert decompose_profile((2, 1), 2) == Partition(frozenset({0}), frozenset({1}))
    assert decompose_profile((2, 2, 2), 3) is None
    assert decompose_profile((1, 1), 5) == Partition(frozenset(), frozenset({0, 1}))
    three_e2 = NrtMatrix(2, (canonical_row(2, 2),) * 3)
    assert is_decomposable(three_e2, 3) is None


def test_partition_overlap_rejected():
    with pytest.raises(ValueError):
        Partition(frozenset({0}), frozenset({0, 1}))


@settings(max_examples=400)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=8), st.integers(0, 14))
def test_witness_is_valid_partition(profile, R):
    part = decompose_profile(profile, R)
    assert (part is not None) == brute_decomposable(profile, R)
    if part is not None:
        assert part.covers(len(profile))
        assert sum(profile[i] for i in part.I) <= R
        assert sum(profile[i] for i in part.J) <= R


def test_vectorised_matches_scalar():
    rng = random.Random(3)
    for R in (0, 1, 3, 7, 12, 70):
        profiles = np.array([[rng.randint(0, 6) for _ in range(6)] for _ in range(300)])
        fast = decomposable_many(profiles, R)
        slow = [decompose_profile(tuple(p), R) is not None for p in profiles]
        assert fast.tolist() == slow


@pytest.mark.parametrize("q,s,r", [(2, 2, 2), (3, 2, 1), (2, 2, 3)])
def test_balls_intersect_matches_enumeration(q, s, r):
    pts = [mat(q, [digits[i * r:(i + 1) * r] for i in range(s)]) for digits in product(range(q), repeat=s * r)]
    for R in range(s * r + 1):
        balls = {x: brute_ball(q, x.rows, R) for x in pts}
        for x in pts:
            for y in pts:
                assert balls_intersect(x, y, R) == bool(balls[x] & balls[y])
