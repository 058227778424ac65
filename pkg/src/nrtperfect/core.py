"""
Alphabet, matrix and metric primitives for NRT spaces.

A point of the space is an ``s x r`` matrix over the residues ``Z_q``.  Each
row is a chain of length ``r``; the weight of a row is the (1-based) position
of its last nonzero entry, and the weight of a matrix is the sum of its row
weights.  The distance between two matrices is the weight of their difference.

Rows are 0-indexed everywhere in the library API (row ``i`` of an ``s``-row
matrix has ``0 <= i < s``).  Column positions in weights are 1-based, so a row
whose only nonzero entry sits in storage column ``j`` has weight ``j + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

Row = Tuple[int, ...]


@dataclass(frozen=True)
class Params:
    """Parameter tuple ``(q, s, r, R)`` of an NRT space with a radius."""

    q: int
    s: int
    r: int
    R: int

    def __post_init__(self) -> None:
        for name in ("q", "s", "r", "R"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an int, got {value!r}")
        if self.q < 2:
            raise ValueError(f"alphabet size q must be >= 2, got {self.q}")
        if self.s < 1:
            raise ValueError(f"number of rows s must be >= 1, got {self.s}")
        if self.r < 1:
            raise ValueError(f"chain length r must be >= 1, got {self.r}")
        if self.R < 0:
            raise ValueError(f"radius R must be >= 0, got {self.R}")

    @property
    def t(self) -> int:
        return self.s - self.R - 1

    @property
    def delta(self) -> int:
        return (self.r + 1) * (self.R + 1) - self.s * self.r - 1

    @property
    def n(self) -> int:
        """Number of entries ``s * r`` of a matrix."""
        return self.s * self.r

    @property
    def space_size(self) -> int:
        return self.q ** (self.s * self.r)

    def with_radius(self, R: int) -> "Params":
        return Params(self.q, self.s, self.r, R)

    def with_shape(self, s: int | None = None, r: int | None = None) -> "Params":
        return Params(self.q, self.s if s is None else s, self.r if r is None else r, self.R)


def row_weight(row: Sequence[int]) -> int:
    """Return the NRT weight of a single row: 0 for the zero row, else the
    1-based position of its last nonzero entry."""
    for j in range(len(row) - 1, -1, -1):
        if row[j] != 0:
            return j + 1
    return 0


def canonical_row(j: int, r: int) -> Row:
    """The row ``e_j`` of length ``r``; ``e_0`` is the zero row."""
    if not 0 <= j <= r:
        raise ValueError(f"canonical row index must lie in [0, {r}], got {j}")
    return tuple(1 if k == j - 1 else 0 for k in range(r))


@dataclass(frozen=True, order=True)
class NrtMatrix:
    """An immutable ``s x r`` matrix with entries in ``[0, q)``.

    Ordering compares ``q`` first and then the row-major entry sequence, so
    sorting matrices of one space sorts them lexicographically.
    """

    q: int
    rows: Tuple[Row, ...]

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"alphabet size q must be >= 2, got {self.q}")
        if not self.rows:
            raise ValueError("a matrix needs at least one row")
        width = len(self.rows[0])
        if width < 1:
            raise ValueError("a matrix needs at least one column")
        for row in self.rows:
            if len(row) != width:
                raise ValueError("all rows must have the same length")
            for e in row:
                if not 0 <= e < self.q:
                    raise ValueError(f"entry {e} outside [0, {self.q})")

    @classmethod
    def from_rows(cls, q: int, rows: Iterable[Iterable[int]]) -> "NrtMatrix":
        """Build a matrix, reducing every entry to its least residue mod ``q``."""
        return cls(q, tuple(tuple(int(e) % q for e in row) for row in rows))

    @classmethod
    def from_flat(cls, q: int, s: int, r: int, digits: Sequence[int]) -> "NrtMatrix":
        if len(digits) != s * r:
            raise ValueError(f"expected {s * r} digits, got {len(digits)}")
        return cls(q, tuple(tuple(digits[i * r:(i + 1) * r]) for i in range(s)))

    @classmethod
    def zeros(cls, q: int, s: int, r: int) -> "NrtMatrix":
        return cls(q, tuple((0,) * r for _ in range(s)))

    @property
    def s(self) -> int:
        return len(self.rows)

    @property
    def r(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> Tuple[int, int, int]:
        """``(q, s, r)``: everything two matrices must share to be compared."""
        return (self.q, len(self.rows), len(self.rows[0]))

    def flat(self) -> Tuple[int, ...]:
        return tuple(e for row in self.rows for e in row)

    def row_weights(self) -> Tuple[int, ...]:
        return tuple(row_weight(row) for row in self.rows)

    def weight(self) -> int:
        return sum(row_weight(row) for row in self.rows)

    def is_zero(self) -> bool:
        return all(e == 0 for row in self.rows for e in row)

    def _check_compatible(self, other: "NrtMatrix") -> None:
        if not isinstance(other, NrtMatrix):
            raise TypeError(f"expected NrtMatrix, got {type(other).__name__}")
        if self.shape != other.shape:
            raise ValueError(f"shape/alphabet mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "NrtMatrix") -> "NrtMatrix":
        self._check_compatible(other)
        q = self.q
        return NrtMatrix(q, tuple(
            tuple((a + b) % q for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        ))

    def __sub__(self, other: "NrtMatrix") -> "NrtMatrix":
        self._check_compatible(other)
        q = self.q
        return NrtMatrix(q, tuple(
            tuple((a - b) % q for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        ))

    def __neg__(self) -> "NrtMatrix":
        q = self.q
        return NrtMatrix(q, tuple(tuple((-a) % q for a in row) for row in self.rows))

    def restrict(self, keep: Iterable[int]) -> "NrtMatrix":
        """Zero out every row whose index is not in ``keep``."""
        keep = set(keep)
        zero = (0,) * self.r
        return NrtMatrix(self.q, tuple(
            row if i in keep else zero for i, row in enumerate(self.rows)
        ))

    def hstack(self, other: "NrtMatrix") -> "NrtMatrix":
        """Concatenate columns: ``(self, other)`` as an ``s x (r + r')`` matrix."""
        if self.q != other.q or self.s != other.s:
            raise ValueError("hstack needs matching q and row count")
        return NrtMatrix(self.q, tuple(a + b for a, b in zip(self.rows, other.rows)))

    def split(self, r: int) -> Tuple["NrtMatrix", "NrtMatrix"]:
        """Inverse of :meth:`hstack`: first ``r`` columns and the remainder."""
        if not 1 <= r < self.r:
            raise ValueError(f"split point must lie in [1, {self.r - 1}], got {r}")
        return (
            NrtMatrix(self.q, tuple(row[:r] for row in self.rows)),
            NrtMatrix(self.q, tuple(row[r:] for row in self.rows)),
        )

    def to_text(self, sep: str = " / ") -> str:
        joiner = "" if self.q <= 10 else " "
        return sep.join(joiner.join(str(e) for e in row) for row in self.rows)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class RowPermutation:
    """A bijection ``theta`` of the row indices ``0..s-1``.

    ``mapping[i]`` is ``theta(i)``.  Applying it sends row ``i`` of the input
    to row ``theta(i)`` of the output.
    """

    mapping: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError(f"not a bijection of range({len(self.mapping)}): {self.mapping}")

    @classmethod
    def identity(cls, s: int) -> "RowPermutation":
        return cls(tuple(range(s)))

    @classmethod
    def cyclic_shift(cls, s: int, k: int = 1) -> "RowPermutation":
        return cls(tuple((i + k) % s for i in range(s)))

    def inverse(self) -> "RowPermutation":
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return RowPermutation(tuple(inv))


def weight(x: NrtMatrix) -> int:
    return x.weight()


def distance(x: NrtMatrix, y: NrtMatrix) -> int:
    return (x - y).weight()


def translate(x: NrtMatrix, z: NrtMatrix) -> NrtMatrix:
    return x + z


def apply_row_permutation(x: NrtMatrix, theta: RowPermutation) -> NrtMatrix:
    """Row ``i`` of the result is row ``theta^-1(i)`` of ``x``."""
    if len(theta.mapping) != x.s:
        raise ValueError(f"permutation acts on {len(theta.mapping)} rows, matrix has {x.s}")
    inv = theta.inverse().mapping
    return NrtMatrix(x.q, tuple(x.rows[inv[i]] for i in range(x.s)))
