"""Exhaustive search for perfect codes by exact cover with ball translates.

The search always branches on the smallest uncovered point.  Its candidates
are the centers whose ball contains that point and is disjoint from every
ball placed so far.  Disjointness is read off a precomputed set ``D`` of
``R``-decomposable offsets.  Placing a center ``c`` blocks every center in
``c + D``, because ``B(c, R)`` and ``B(c', R)`` meet exactly when ``c - c'``
is decomposable.  ``D`` itself comes from the knapsack criterion.

Translating a perfect code keeps it perfect, so by default the zero matrix
is placed first.  This loses no solutions.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .codes import Code, is_perfect
from .core import NrtMatrix, Params
from .decompose import balls_intersect, decomposable_many
from .enumeration import Space, ball_volume, space_for


class SearchStatus(enum.Enum):
    FOUND = "Found"
    EXHAUSTED_NONE = "ExhaustedNone"
    ABORTED = "Aborted"


@dataclass(frozen=True)
class SearchConfig:
    max_nodes: int = 10**7
    parallel_width: int = 1
    use_symmetry: bool = True
    debug: bool = False
    forward_check: bool = True

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise ValueError(f"max_nodes must be >= 1, got {self.max_nodes}")
        if self.parallel_width < 1:
            raise ValueError(f"parallel_width must be >= 1, got {self.parallel_width}")


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    code: Optional[Code]
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


def greedy_cover_lower_bound(params: Params, uncovered: Optional[int] = None) -> int:
    """Fewest further balls that could cover ``uncovered`` points (default: all)."""
    if uncovered is None:
        uncovered = params.space_size
    if uncovered < 0:
        raise ValueError("uncovered count must be >= 0")
    return -(-uncovered // ball_volume(params))


_NBR_TABLE_LIMIT = 1 << 25


class _Problem:
    """Immutable per-instance tables shared by every branch."""

    def __init__(self, params: Params):
        self.params = params
        self.space: Space = space_for(params.q, params.s, params.r)
        self.ball = self.space.ball_offsets(params.R)
        self.decomposable = np.flatnonzero(decomposable_many(self.space.row_weights, params.R))
        self.target = self.space.size // len(self.ball)
        # nbr[p] lists the centers whose ball holds p; skipped when the table would be large
        if self.space.size * len(self.ball) <= _NBR_TABLE_LIMIT:
            idx = np.arange(self.space.size)
            self.nbr = np.empty((self.space.size, len(self.ball)), dtype=np.int32)
            for k, off in enumerate(self.ball):
                self.nbr[:, k] = self.space.add(idx, off)
        else:
            self.nbr = None


class _State:
    def __init__(self, problem: _Problem, debug: bool):
        self.problem = problem
        size = problem.space.size
        self.covered = np.zeros(size, dtype=bool)
        self.blocked = np.zeros(size, dtype=np.int32)
        self.n_covered = 0
        self.chosen: List[int] = []
        self.debug = debug
        # live[p]: unblocked centers whose ball holds p (only with a neighbour table)
        self.live = np.full(size, len(problem.ball), dtype=np.int64) if problem.nbr is not None else None
        self._newly: List[np.ndarray] = []

    def place(self, c: int) -> None:
        sp = self.problem.space
        if self.debug:
            self._check_disjoint(c)
        pts = sp.add(c, self.problem.ball)
        self.covered[pts] = True
        self.n_covered += len(pts)
        targets = sp.add(c, self.problem.decomposable)
        newly = targets[self.blocked[targets] == 0]
        self.blocked[targets] += 1
        if self.live is not None:
            self.live -= np.bincount(self.problem.nbr[newly].ravel(), minlength=len(self.live))
        self._newly.append(newly)
        self.chosen.append(c)

    def unplace(self) -> None:
        sp = self.problem.space
        c = self.chosen.pop()
        newly = self._newly.pop()
        pts = sp.add(c, self.problem.ball)
        self.covered[pts] = False
        self.n_covered -= len(pts)
        self.blocked[sp.add(c, self.problem.decomposable)] -= 1
        if self.live is not None:
            self.live += np.bincount(self.problem.nbr[newly].ravel(), minlength=len(self.live))

    def _check_disjoint(self, c: int) -> None:
        sp, R = self.problem.space, self.problem.params.R
        x = sp.matrix(c)
        for other in self.chosen:
            if balls_intersect(x, sp.matrix(other), R):
                raise AssertionError(f"center {c} overlaps placed center {other}")
        if self.blocked[c]:
            raise AssertionError(f"center {c} is blocked")

    def dead_end(self, full: bool = False) -> bool:
        """Some uncovered point has no center left that could still cover it.

        Only points next to the centers blocked by the last placement can have
        just lost their last candidate, so by default only those are checked.
        """
        if self.live is None:
            return False
        if full or not self._newly:
            return bool(((self.live == 0) & ~self.covered).any())
        pts = self.problem.nbr[self._newly[-1]].ravel()
        return bool(((self.live[pts] == 0) & ~self.covered[pts]).any())

    def candidates(self) -> Optional[np.ndarray]:
        """Unblocked centers covering the smallest uncovered point; ``None`` when done."""
        if self.n_covered == len(self.covered):
            return None
        p = int(np.argmin(self.covered))
        # B(R) = -B(R), so the centers whose ball holds p are p + B(R)
        cands = self.problem.space.add(p, self.problem.ball)
        return np.sort(cands[self.blocked[cands] == 0])


def _dfs(problem: _Problem, prefix: Sequence[int], max_nodes: int,
         debug: bool, forward_check: bool = True) -> Tuple[SearchStatus, Optional[List[int]], int]:
    state = _State(problem, debug)
    for c in prefix:
        if state.blocked[c]:
            return SearchStatus.EXHAUSTED_NONE, None, 0
        state.place(c)
    if forward_check and state.dead_end(full=True):
        return SearchStatus.EXHAUSTED_NONE, None, 0
    base = len(state.chosen)
    nodes = 0
    root = state.candidates()
    if root is None:
        return SearchStatus.FOUND, list(state.chosen), nodes
    stack = [[root, 0]]
    while stack:
        frame = stack[-1]
        cands, pos = frame
        if len(state.chosen) > base + len(stack) - 1:
            state.unplace()
        if pos >= len(cands):
            stack.pop()
            continue
        frame[1] = pos + 1
        nodes += 1
        if nodes > max_nodes:
            return SearchStatus.ABORTED, None, nodes - 1
        state.place(int(cands[pos]))
        uncovered = len(state.covered) - state.n_covered
        if len(state.chosen) + greedy_cover_lower_bound(problem.params, uncovered) > problem.target:
            continue
        if forward_check and state.dead_end():
            continue
        nxt = state.candidates()
        if nxt is None:
            return SearchStatus.FOUND, list(state.chosen), nodes
        stack.append([nxt, 0])
    return SearchStatus.EXHAUSTED_NONE, None, nodes


def _subtree_worker(args) -> Tuple[SearchStatus, Optional[List[int]], int]:
    params, prefix, max_nodes, debug, forward_check = args
    return _dfs(_Problem(params), prefix, max_nodes, debug, forward_check)


def _to_code(problem: _Problem, chosen: Sequence[int]) -> Code:
    return Code.of(problem.space.matrix(c) for c in chosen)


def search_perfect(params: Params, config: SearchConfig = SearchConfig()) -> SearchOutcome:
    """Find an ``R``-perfect code or prove that none exists.

    ``ExhaustedNone`` means the whole tree was explored.  ``Aborted`` means the
    node budget ran out first, and nothing is claimed.
    """
    vol = ball_volume(params)
    if params.space_size % vol != 0:
        return SearchOutcome(SearchStatus.EXHAUSTED_NONE, None, 0)
    problem = _Problem(params)
    prefix = [0] if config.use_symmetry else []

    if config.parallel_width == 1:
        status, chosen, nodes = _dfs(problem, prefix, config.max_nodes, config.debug, config.forward_check)
    else:
        status, chosen, nodes = _parallel(problem, prefix, config)

    code = None
    if status is SearchStatus.FOUND:
        code = _to_code(problem, chosen)
        if not is_perfect(code, params.R):
            raise AssertionError("search produced a code that is not perfect")
    return SearchOutcome(status, code, nodes)


def _parallel(problem: _Problem, prefix: List[int], config: SearchConfig):
    state = _State(problem, config.debug)
    for c in prefix:
        state.place(c)
    root = state.candidates()
    if root is None:
        return SearchStatus.FOUND, list(state.chosen), 0
    jobs = [(problem.params, prefix + [int(c)], config.max_nodes, config.debug,
             config.forward_check) for c in root]
    total = 0
    aborted = False
    with ProcessPoolExecutor(max_workers=config.parallel_width) as pool:
        # results are consumed in candidate order so the returned code is deterministic
        for status, chosen, nodes in pool.map(_subtree_worker, jobs):
            total += nodes + 1
            if status is SearchStatus.FOUND:
                pool.shutdown(wait=False, cancel_futures=True)
                return status, chosen, total
            aborted = aborted or status is SearchStatus.ABORTED
    return (SearchStatus.ABORTED if aborted else SearchStatus.EXHAUSTED_NONE), None, total


def search_perfect_naive(params: Params, max_nodes: int = 10**7) -> Tuple[SearchStatus, Optional[Code]]:
    """Plain exact cover with explicit ball sets: no symmetry, no divisibility
    shortcut, no knapsack.  Reference for small instances only."""
    space = space_for(params.q, params.s, params.r)
    ball = space.ball_offsets(params.R)
    balls = [frozenset(space.add(c, ball).tolist()) for c in range(space.size)]
    covered: set = set()
    chosen: List[int] = []
    nodes = 0

    def rec() -> Optional[bool]:
        nonlocal nodes
        if len(covered) == space.size:
            return True
        p = next(k for k in range(space.size) if k not in covered)
        for c in range(space.size):
            if p in balls[c] and not (balls[c] & covered):
                nodes += 1
                if nodes > max_nodes:
                    return None
                covered.update(balls[c])
                chosen.append(c)
                res = rec()
                if res is not False:
                    return res
                chosen.pop()
                covered.difference_update(balls[c])
        return False

    res = rec()
    if res is None:
        return SearchStatus.ABORTED, None
    if res:
        return SearchStatus.FOUND, Code.of(space.matrix(c) for c in chosen)
    return SearchStatus.EXHAUSTED_NONE, None
