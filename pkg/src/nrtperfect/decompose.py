"""Decomposability of matrices and the ball-intersection test.

Two radius-``R`` balls ``B(x, R)`` and ``B(x', R)`` meet exactly when the
rows of ``x - x'`` can be split into two groups whose row weights each sum
to at most ``R``.  Deciding that is a 0-1 knapsack whose values equal its
weights: pack as much row weight as fits under ``R`` and check whether the
rows left over also fit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Sequence

import numpy as np

from .core import NrtMatrix


@dataclass(frozen=True)
class Partition:
    """A split of row indices ``0..s-1`` into disjoint ``I`` and ``J``."""

    I: FrozenSet[int]
    J: FrozenSet[int]

    def __post_init__(self) -> None:
        if self.I & self.J:
            raise ValueError(f"I and J overlap: {sorted(self.I & self.J)}")

    def covers(self, s: int) -> bool:
        return (self.I | self.J) == frozenset(range(s))


@dataclass(frozen=True)
class KnapsackSolution:
    best_value: int
    chosen: FrozenSet[int]


def knapsack_max(weights: Sequence[int], capacity: int) -> KnapsackSolution:
    """Maximise ``sum(weights[i] for i in chosen)`` subject to it being ``<= capacity``.

    Dynamic programming over reachable sums ``0..capacity``.  The witness is
    rebuilt from the last item backwards, dropping an item whenever the target
    sum is still reachable without it; among optimal subsets this returns the
    one that avoids high indices (colexicographically smallest).
    """
    if capacity < 0:
        raise ValueError(f"capacity must be >= 0, got {capacity}")
    n = len(weights)
    for w in weights:
        if w < 0:
            raise ValueError(f"weights must be nonnegative, got {w}")
    # reach[i][c]: sum c is attainable with items 0..i-1
    reach = [[False] * (capacity + 1) for _ in range(n + 1)]
    reach[0][0] = True
    for i, w in enumerate(weights):
        prev, cur = reach[i], reach[i + 1]
        for c in range(capacity + 1):
            cur[c] = prev[c] or (c >= w and prev[c - w])
    best = max(c for c in range(capacity + 1) if reach[n][c])
    chosen = set()
    target = best
    for i in range(n - 1, -1, -1):
        if reach[i][target]:
            continue
        chosen.add(i)
        target -= weights[i]
    return KnapsackSolution(best, frozenset(chosen))


def decompose_profile(profile: Sequence[int], R: int) -> Optional[Partition]:
    """Witness partition for a row-weight profile, or ``None`` if indecomposable."""
    if R < 0:
        raise ValueError(f"radius must be >= 0, got {R}")
    s = len(profile)
    total = sum(profile)
    if total <= R:
        return Partition(frozenset(), frozenset(range(s)))
    sol = knapsack_max(profile, R)
    if total - sol.best_value > R:
        return None
    return Partition(sol.chosen, frozenset(range(s)) - sol.chosen)


def is_decomposable(x: NrtMatrix, R: int) -> Optional[Partition]:
    """Return an ``(x, R)``-partition ``(I, J)`` with both ``w(x|_I) <= R`` and
    ``w(x|_J) <= R``, or ``None`` when no such split exists.

    A matrix that already has weight ``<= R`` gets the witness ``(∅, all rows)``.
    """
    return decompose_profile(x.row_weights(), R)


def balls_intersect(x: NrtMatrix, x_prime: NrtMatrix, R: int) -> bool:
    return is_decomposable(x - x_prime, R) is not None


def decomposable_many(profiles: np.ndarray, R: int) -> np.ndarray:
    """Vectorised decomposability for an ``(M, s)`` array of row-weight profiles.

    Same knapsack, solved as a subset-sum bitset per profile: bit ``c`` of the
    mask is set when some subset of rows has total weight ``c <= R``.
    """
    profiles = np.asarray(profiles, dtype=np.int64)
    if profiles.ndim != 2:
        raise ValueError("profiles must be a 2-D array")
    if R < 0:
        raise ValueError(f"radius must be >= 0, got {R}")
    if R >= 62:
        return np.array([decompose_profile(tuple(p), R) is not None for p in profiles], dtype=bool)
    full = np.uint64((1 << (R + 1)) - 1)
    mask = np.ones(profiles.shape[0], dtype=np.uint64)
    for k in range(profiles.shape[1]):
        w = profiles[:, k]
        fits = w <= R
        shift = np.where(fits, w, 0).astype(np.uint64)
        mask = mask | np.where(fits, (mask << shift) & full, np.uint64(0))
    # need a packed sum c with total - c <= R, i.e. some set bit at position >= total - R
    lo = profiles.sum(axis=1) - R
    ok = lo <= R
    lo = np.clip(lo, 0, R + 1).astype(np.uint64)
    return ok & ((mask >> lo) != 0)
