"""Exact counting and iteration over NRT spaces.

Counts use Python integers throughout, so ``q ** (s * r)`` never overflows.
The :class:`Space` helper indexes every matrix of a (small) space by an
integer and is what the exhaustive checkers in other modules run on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Tuple

import numpy as np

from .core import NrtMatrix, Params, Row


class BudgetExceeded(RuntimeError):
    """An exhaustive check would enumerate more points than allowed."""

    def __init__(self, needed: int, budget: int):
        super().__init__(f"enumeration needs {needed} points, budget is {budget}")
        self.needed = needed
        self.budget = budget


def check_budget(needed: int, budget: int) -> None:
    if needed > budget:
        raise BudgetExceeded(needed, budget)


def row_weight_counts(q: int, r: int) -> List[int]:
    """``c[j]`` = number of rows of length ``r`` with weight exactly ``j``."""
    if q < 2 or r < 1:
        raise ValueError(f"need q >= 2 and r >= 1, got q={q}, r={r}")
    return [1] + [(q - 1) * q ** (j - 1) for j in range(1, r + 1)]


def _convolve(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class WeightDistribution:
    params: Params
    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sum(self.counts) != self.params.space_size:
            raise ValueError("weight distribution does not sum to the space size")
        if self.counts[0] != 1:
            raise ValueError("exactly one matrix has weight 0")

    def cumulative(self, R: int) -> int:
        return sum(self.counts[: R + 1])


@lru_cache(maxsize=None)
def _distribution(q: int, s: int, r: int) -> Tuple[int, ...]:
    row = row_weight_counts(q, r)
    dist = [1]
    for _ in range(s):
        dist = _convolve(dist, row)
    return tuple(dist)


def weight_distribution(params: Params) -> WeightDistribution:
    """Number of matrices of each weight ``0..s*r`` (s-fold row convolution)."""
    return WeightDistribution(params, _distribution(params.q, params.s, params.r))


def ball_volume(params: Params) -> int:
    """``|B(R)|`` for the space and radius of ``params``."""
    return sum(_distribution(params.q, params.s, params.r)[: params.R + 1])


def iter_space(params: Params) -> Iterator[NrtMatrix]:
    """Every matrix of the space once, lexicographic on row-major entries."""
    q, s, r = params.q, params.s, params.r
    for digits in product(range(q), repeat=s * r):
        yield NrtMatrix(q, tuple(digits[i * r:(i + 1) * r] for i in range(s)))


def _rows_of_weight(q: int, r: int, w: int) -> List[Row]:
    if w == 0:
        return [(0,) * r]
    tail = (0,) * (r - w)
    return [
        head + (lead,) + tail
        for head in product(range(q), repeat=w - 1)
        for lead in range(1, q)
    ]


def _compositions(s: int, r: int, budget: int) -> Iterator[Tuple[int, ...]]:
    # Row-weight profiles (w_1..w_s), each w_i <= r, with sum <= budget; lexicographic.
    if s == 0:
        yield ()
        return
    for w in range(min(r, budget) + 1):
        for rest in _compositions(s - 1, r, budget - w):
            yield (w,) + rest


def iter_ball(center: NrtMatrix, R: int) -> Iterator[NrtMatrix]:
    """Every matrix within distance ``R`` of ``center``, each exactly once.

    Offsets are generated by weight profile (lexicographic) and then by the
    rows of each prescribed weight, so nothing outside the ball is scanned.
    """
    q, s, r = center.shape
    rows_cache = {w: _rows_of_weight(q, r, w) for w in range(min(r, R) + 1)}
    zero_center = center.is_zero()
    for profile in _compositions(s, r, R):
        for rows in product(*(rows_cache[w] for w in profile)):
            offset = NrtMatrix(q, tuple(rows))
            yield offset if zero_center else center + offset


class Space:
    """Integer-indexed view of ``Z_q^{s x r}`` for exhaustive computations.

    Point ``k`` is the matrix whose row-major digit string is ``k`` written in
    base ``q``, so index order equals lexicographic order.
    """

    def __init__(self, q: int, s: int, r: int):
        self.q, self.s, self.r = q, s, r
        self.n = s * r
        self.size = q ** self.n
        self.place = q ** np.arange(self.n - 1, -1, -1, dtype=np.int64)
        idx = np.arange(self.size, dtype=np.int64)
        self.digits = ((idx[:, None] // self.place[None, :]) % q).astype(np.int64)
        rows = self.digits.reshape(self.size, s, r)
        self.row_weights = row_weights_array(rows)
        self.weights = self.row_weights.sum(axis=1)

    @classmethod
    def of(cls, params: Params) -> "Space":
        return space_for(params.q, params.s, params.r)

    def index(self, x: NrtMatrix) -> int:
        if x.shape != (self.q, self.s, self.r):
            raise ValueError(f"matrix shape {x.shape} does not match space {(self.q, self.s, self.r)}")
        return int(np.dot(np.array(x.flat(), dtype=np.int64), self.place))

    def matrix(self, k: int) -> NrtMatrix:
        return NrtMatrix.from_flat(self.q, self.s, self.r, [int(d) for d in self.digits[k]])

    def ball_offsets(self, R: int) -> np.ndarray:
        return np.flatnonzero(self.weights <= R)

    def add(self, base, offsets: np.ndarray) -> np.ndarray:
        """Indices of ``base + offset`` for each offset (``base`` an index or index array)."""
        d = (self.digits[base] + self.digits[offsets]) % self.q
        return d @ self.place

    def sub(self, base, offsets: np.ndarray) -> np.ndarray:
        d = (self.digits[base] - self.digits[offsets]) % self.q
        return d @ self.place


@lru_cache(maxsize=8)
def space_for(q: int, s: int, r: int) -> Space:
    return Space(q, s, r)


def row_weights_array(rows: np.ndarray) -> np.ndarray:
    """Row weights of a ``(..., s, r)`` integer array, shape ``(..., s)``."""
    r = rows.shape[-1]
    positions = np.arange(1, r + 1, dtype=np.int64)
    return np.where(rows != 0, positions, 0).max(axis=-1)
