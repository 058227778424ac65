"""Codes in NRT spaces: perfection predicates, known constructions, lifting.

A code is perfect of radius ``R`` when its ``R``-balls are pairwise disjoint
and cover the space.  Since all balls of one radius have the same size, the
covering half is equivalent to ``|C| * |B(R)| == q^(s*r)`` once packing is
known, which is how :func:`is_perfect` decides it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple, Union

import numpy as np

from .core import NrtMatrix, Params, RowPermutation, apply_row_permutation
from .decompose import decomposable_many
from .enumeration import ball_volume, check_budget, row_weights_array, space_for

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Code:
    """A non-empty set of matrices of one space, stored sorted and deduplicated."""

    q: int
    s: int
    r: int
    words: Tuple[NrtMatrix, ...]

    def __post_init__(self) -> None:
        if not self.words:
            raise ValueError("a code must be non-empty")
        for w in self.words:
            if w.shape != (self.q, self.s, self.r):
                raise ValueError(f"codeword shape {w.shape} != {(self.q, self.s, self.r)}")
        if list(self.words) != sorted(set(self.words)):
            raise ValueError("codewords must be sorted and duplicate-free; use Code.of")

    @classmethod
    def of(cls, words: Iterable[NrtMatrix]) -> "Code":
        words = sorted(set(words))
        if not words:
            raise ValueError("a code must be non-empty")
        q, s, r = words[0].shape
        return cls(q, s, r, tuple(words))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, x: object) -> bool:
        return x in set(self.words)

    @property
    def space_size(self) -> int:
        return self.q ** (self.s * self.r)

    def params(self, R: int) -> Params:
        return Params(self.q, self.s, self.r, R)

    def as_array(self) -> np.ndarray:
        """Codewords as an ``(|C|, s, r)`` integer array."""
        return np.array([w.rows for w in self.words], dtype=np.int64)

    def translate(self, z: NrtMatrix) -> "Code":
        return Code.of(w + z for w in self.words)

    def permute_rows(self, theta: RowPermutation) -> "Code":
        return Code.of(apply_row_permutation(w, theta) for w in self.words)

    def is_trivial(self) -> bool:
        return len(self.words) == 1 or len(self.words) == self.space_size


def is_packing(code: Code, R: int) -> bool:
    """True iff the ``R``-balls around distinct codewords are pairwise disjoint."""
    words = code.as_array()
    q = code.q
    for i in range(len(words) - 1):
        diffs = (words[i + 1:] - words[i]) % q
        if decomposable_many(row_weights_array(diffs), R).any():
            return False
    return True


def is_covering(code: Code, R: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Every point of the space lies in some codeword's ``R``-ball (by enumeration)."""
    check_budget(code.space_size, budget)
    space = space_for(code.q, code.s, code.r)
    covered = np.zeros(space.size, dtype=bool)
    offsets = space.ball_offsets(R)
    for w in code.words:
        covered[space.add(space.index(w), offsets)] = True
    return bool(covered.all())


def is_perfect(code: Code, R: int) -> bool:
    if len(code) * ball_volume(code.params(R)) != code.space_size:
        return False
    return is_packing(code, R)


Suffix = Tuple[int, ...]
PrefixMap = Union[Mapping[Suffix, Sequence[int]], Callable[[Suffix], Sequence[int]]]


def construct_s1(f: PrefixMap, params: Params) -> Code:
    """Single-chain perfect code ``{(f(y), y)}`` with ``y`` over all length-``(r-R)`` tuples.

    The last ``r - R`` coordinates of a codeword are ``y`` and the first ``R``
    are ``f(y)``; any ``f`` gives an ``R``-perfect code.
    """
    q, s, r, R = params.q, params.s, params.r, params.R
    if s != 1:
        raise ValueError(f"construct_s1 needs s == 1, got s={s}")
    if not 0 < R < r:
        raise ValueError(f"construct_s1 needs 0 < R < r, got R={R}, r={r}")
    lookup = f.__getitem__ if isinstance(f, Mapping) else f
    words = []
    for y in product(range(q), repeat=r - R):
        prefix = tuple(lookup(y))
        if len(prefix) != R:
            raise ValueError(f"f({y}) has length {len(prefix)}, expected {R}")
        words.append(NrtMatrix.from_rows(q, [prefix + y]))
    return Code.of(words)


def repetition_radius(s: int) -> int:
    return (s - 1) // 2


def construct_repetition(s: int) -> Code:
    """Binary repetition code ``{0...0, 1...1}`` of odd length ``s`` (as ``s x 1``)."""
    if s < 1 or s % 2 == 0:
        raise ValueError(f"repetition code needs odd s, got s={s}")
    return Code.of([NrtMatrix(2, ((0,),) * s), NrtMatrix(2, ((1,),) * s)])


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def hamming_length(q: int, i: int) -> int:
    return (q**i - 1) // (q - 1)


def hamming_parity_check(q: int, i: int) -> np.ndarray:
    """``i x s`` matrix whose columns are the nonzero vectors of ``Z_q^i`` with
    first nonzero entry 1 (one representative per line through the origin)."""
    cols = []
    for v in product(range(q), repeat=i):
        nz = [e for e in v if e]
        if nz and nz[0] == 1:
            cols.append(v)
    return np.array(cols, dtype=np.int64).T


def construct_hamming(q: int, i: int) -> Code:
    """Null space of the Hamming parity-check matrix, as a code in ``Z_q^{s x 1}``."""
    if not is_prime(q):
        raise ValueError(f"Hamming construction needs prime q (field arithmetic in Z_q), got q={q}")
    if i < 2:
        raise ValueError(f"Hamming construction needs i >= 2, got i={i}")
    H = hamming_parity_check(q, i)
    s = H.shape[1]
    # unit columns are parity positions: H restricted to them is the identity
    unit = []
    for k in range(i):
        e = np.zeros(i, dtype=np.int64)
        e[k] = 1
        unit.append(next(j for j in range(s) if np.array_equal(H[:, j], e)))
    info = [j for j in range(s) if j not in unit]
    words = []
    for u in product(range(q), repeat=len(info)):
        x = np.zeros(s, dtype=np.int64)
        x[info] = u
        x[unit] = (-(H[:, info] @ np.array(u, dtype=np.int64))) % q
        words.append(NrtMatrix(q, tuple((int(e),) for e in x)))
    return Code.of(words)


@dataclass(frozen=True)
class LiftMap:
    """Assignment of an ``s x r`` code to every ``s x h`` suffix matrix."""

    h: int
    assignment: Dict[NrtMatrix, Code] = field(hash=False)

    def __post_init__(self) -> None:
        if self.h < 1:
            raise ValueError(f"suffix width h must be >= 1, got {self.h}")
        shapes = {(c.q, c.s) for c in self.assignment.values()}
        if len(shapes) != 1:
            raise ValueError("all assigned codes must share q and s")
        (q, s), = shapes
        if len({c.r for c in self.assignment.values()}) != 1:
            raise ValueError("all assigned codes must share r")
        for suffix in self.assignment:
            if suffix.shape != (q, s, self.h):
                raise ValueError(f"suffix shape {suffix.shape} != {(q, s, self.h)}")
        if len(self.assignment) != q ** (s * self.h):
            raise ValueError(f"lift map must assign all {q ** (s * self.h)} suffixes")

    def __call__(self, suffix: NrtMatrix) -> Code:
        return self.assignment[suffix]

    @property
    def base_shape(self) -> Tuple[int, int, int]:
        c = next(iter(self.assignment.values()))
        return (c.q, c.s, c.r)


def _all_suffixes(q: int, s: int, h: int) -> Iterable[NrtMatrix]:
    for digits in product(range(q), repeat=s * h):
        yield NrtMatrix.from_flat(q, s, h, digits)


def lift_trivial(code: Code, h: int, R: int) -> Code:
    """``C' x Z_q^{s x h}``: every codeword extended by every suffix."""
    if R > code.r:
        raise ValueError(f"lifting needs R <= r, got R={R}, r={code.r}")
    if h == 0:
        return code
    if h < 0:
        raise ValueError(f"h must be >= 0, got {h}")
    if not is_perfect(code, R):
        raise ValueError("base code is not R-perfect")
    return Code.of(c.hstack(z) for z in _all_suffixes(code.q, code.s, h) for c in code)


def constant_lift_map(code: Code, h: int) -> LiftMap:
    return LiftMap(h, {z: code for z in _all_suffixes(code.q, code.s, h)})


def lift_general(f: LiftMap, R: int) -> Code:
    """``{(c', c'') : c'' any suffix, c' in f(c'')}`` in the ``s x (r + h)`` space."""
    q, s, r = f.base_shape
    if R > r:
        raise ValueError(f"lifting needs R <= r, got R={R}, r={r}")
    checked: Dict[Code, bool] = {}
    for suffix, code in f.assignment.items():
        if code not in checked:
            checked[code] = is_perfect(code, R)
        if not checked[code]:
            raise ValueError(f"code assigned to suffix {suffix} is not {R}-perfect")
    return Code.of(c.hstack(z) for z, code in f.assignment.items() for c in code)


def project(code: Code, r: int, R: int) -> LiftMap:
    """Split a perfect code of ``s x (r + h)`` by suffix into ``s x r`` perfect codes."""
    if R > r:
        raise ValueError(f"projection needs R <= r, got R={R}, r={r}")
    h = code.r - r
    if h < 1:
        raise ValueError(f"split point r={r} leaves no suffix columns in width {code.r}")
    if not is_perfect(code, R):
        raise ValueError("input code is not R-perfect")
    groups: Dict[NrtMatrix, list] = {}
    for w in code:
        head, tail = w.split(r)
        groups.setdefault(tail, []).append(head)
    assignment = {z: Code.of(ws) for z, ws in groups.items()}
    for z, c in assignment.items():
        if not is_perfect(c, R):
            raise AssertionError(f"projected class of suffix {z} is not {R}-perfect")
    return LiftMap(h, assignment)


def random_translate_lift_map(code: Code, h: int, R: int, rng: random.Random) -> LiftMap:
    """Assign an independent random translate of ``code`` to every suffix.

    Translates of a perfect code are perfect; each distinct translate is
    checked anyway when the map is lifted.
    """
    if not is_perfect(code, R):
        raise ValueError("base code is not R-perfect")
    q, s, r = code.q, code.s, code.r
    assignment = {}
    for z in _all_suffixes(q, s, h):
        shift = NrtMatrix.from_flat(q, s, r, [rng.randrange(q) for _ in range(s * r)])
        assignment[z] = code.translate(shift)
    return LiftMap(h, assignment)
