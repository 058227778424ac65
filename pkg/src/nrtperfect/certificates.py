"""Non-existence witnesses for perfect codes, and exhaustive checkers for them.

If an ``R``-perfect code exists, the zero ball ``B(R)`` is ``R``-closed: every
point outside it lies in some ``R``-ball that avoids it.  A *sticky vector* is a
point outside ``B(R)`` with no such ball, which rules perfect codes out.  When
``(r+1)(R+1) - s*r - 1`` is positive a single sticky vector exists.  When it is
zero, a two-point set is used instead: it cannot be covered by pairwise
disjoint balls that all avoid ``B(R)``.

Every checker enumerates exhaustively.  It raises :class:`BudgetExceeded`
rather than answer when the enumeration would exceed its budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, FrozenSet, Iterable, List, Set

import numpy as np

from .core import NrtMatrix, Params, RowPermutation, apply_row_permutation, canonical_row
from .decompose import balls_intersect, is_decomposable
from .enumeration import BudgetExceeded, Space, ball_volume, check_budget, iter_ball, space_for

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class StickyVectorCert:
    params: Params
    ell: int
    h: int
    m: NrtMatrix

    def __post_init__(self) -> None:
        p = self.params
        if p.R + 1 != (self.ell + 1) * p.s - self.h:
            raise ValueError("R + 1 != (ell + 1) * s - h")
        if not (self.ell * p.s <= p.R + 1 < (self.ell + 1) * p.s):
            raise ValueError("ell is not the unique integer with ell*s <= R+1 < (ell+1)*s")
        if self.m.weight() != p.R + 1:
            raise ValueError("sticky vector must have weight R + 1")


@dataclass(frozen=True)
class StickySetCert:
    params: Params
    m: NrtMatrix
    m_prime: NrtMatrix

    def __post_init__(self) -> None:
        R = self.params.R
        if self.m.weight() != R + 1 or self.m_prime.weight() != R + 1:
            raise ValueError("both sticky-set points must have weight R + 1")


def build_sticky_vector(params: Params) -> StickyVectorCert:
    """Weight-``(R+1)`` vector spread as evenly as possible over the rows.

    With ``R + 1 = (ell + 1) s - h`` and ``1 <= h <= s``, the first ``s - h``
    rows are ``e_{ell+1}`` and the last ``h`` rows are ``e_ell``.
    """
    q, s, r, R = params.q, params.s, params.r, params.R
    if s < 2:
        raise ValueError(f"sticky vectors need s >= 2, got s={s}")
    if params.delta < 1:
        raise ValueError(f"sticky vector requires delta >= 1, got delta={params.delta}")
    if R + 1 > s * r:
        raise ValueError("B(R) is the whole space; there is no point of weight R + 1")
    ell = (R + 1) // s
    h = (ell + 1) * s - (R + 1)
    # h == s when s divides R + 1; then every row is e_ell and e_{ell+1} may not exist
    rows = [canonical_row(ell + 1, r)] * (s - h) if h < s else []
    rows += [canonical_row(ell, r)] * h
    return StickyVectorCert(params, ell, h, NrtMatrix(q, tuple(rows)))


def _standard_m(params: Params) -> NrtMatrix:
    # first R+1 rows e_1, remaining t rows zero
    q, s, r, R = params.q, params.s, params.r, params.R
    e1, zero = canonical_row(1, r), canonical_row(0, r)
    return NrtMatrix(q, tuple([e1] * (R + 1) + [zero] * (s - R - 1)))


def build_sticky_set(params: Params) -> StickySetCert:
    s, r = params.s, params.r
    if s < 2 or r < 2:
        raise ValueError(f"sticky sets need s, r >= 2, got s={s}, r={r}")
    if params.delta != 0:
        raise ValueError(f"sticky set requires delta == 0, got delta={params.delta}")
    m = _standard_m(params)
    return StickySetCert(params, m, apply_row_permutation(m, RowPermutation.cyclic_shift(s)))


def _avoiding_centers(m: NrtMatrix, R: int) -> List[NrtMatrix]:
    """Centers ``c`` with ``m in B(c, R)`` whose ball misses ``B(R)``."""
    return [c for c in iter_ball(m, R) if is_decomposable(c, R) is None]


def verify_sticky_vector(cert: StickyVectorCert, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff every ``R``-ball containing ``m`` meets ``B(R)``."""
    p = cert.params
    if p.delta < 1:
        raise ValueError(f"sticky vector verification requires delta >= 1, got {p.delta}")
    check_budget(ball_volume(p), budget)
    # c ranges over B(m, R): by symmetry these are exactly the centers whose ball holds m
    return all(is_decomposable(c, p.R) is not None for c in iter_ball(cert.m, p.R))


def restriction_lemma_applies(params: Params, c: NrtMatrix) -> bool:
    """Whether ``c`` meets the lemma's hypotheses: ``m in B(c, R)`` and ``B(c, R)`` misses ``B(R)``."""
    m = _standard_m(params)
    return (c - m).weight() <= params.R and is_decomposable(c, params.R) is None


def check_restriction_lemma(params: Params, c: NrtMatrix) -> bool:
    """Check the conclusion forced on any qualifying center ``c``.

    For ``delta <= 0`` the first ``R + 1`` rows of ``c`` must equal ``e_1`` and
    the remaining rows must have total weight exactly ``R``.  Centers that do
    not satisfy the hypotheses pass vacuously (see
    :func:`restriction_lemma_applies`).
    """
    if params.delta > 0:
        raise ValueError(f"restriction lemma requires delta <= 0, got {params.delta}")
    if not restriction_lemma_applies(params, c):
        return True
    R, r = params.R, params.r
    e1 = canonical_row(1, r)
    head_ok = all(row == e1 for row in c.rows[: R + 1])
    tail_weight = sum(c.row_weights()[R + 1:])
    return head_ok and tail_weight == R


@dataclass(frozen=True)
class StickySetAudit:
    """Outcome of exhaustively checking a two-point sticky set."""

    sticky: bool
    centers_m: int
    centers_m_prime: int
    pairs_checked: int
    lemma_failures: int
    row_weight_failures: int
    failing_pairs: int

    @property
    def proof_conditions_hold(self) -> bool:
        return self.lemma_failures == 0 and self.row_weight_failures == 0


def audit_sticky_set(cert: StickySetCert, budget: int = DEFAULT_BUDGET) -> StickySetAudit:
    """Check the sticky-set property and the structural facts its proof uses.

    Besides the property itself, every center ``c`` around ``m`` must pass the
    restriction lemma and have ``w(c_{R+2}) >= 2``.  Each center ``c'`` around
    the shifted point must pass the permuted lemma and have ``w(c'_1) >= 2``.
    """
    p = cert.params
    if p.delta != 0:
        raise ValueError(f"sticky set verification requires delta == 0, got {p.delta}")
    check_budget(ball_volume(p), budget)
    R = p.R
    theta = RowPermutation.cyclic_shift(p.s)
    theta_inv = theta.inverse()
    centers = _avoiding_centers(cert.m, R)
    centers_prime = _avoiding_centers(cert.m_prime, R)

    lemma_failures = 0
    row_weight_failures = 0
    for c in centers:
        lemma_failures += not check_restriction_lemma(p, c)
        row_weight_failures += c.row_weights()[R + 1] < 2
    for c in centers_prime:
        lemma_failures += not check_restriction_lemma(p, apply_row_permutation(c, theta_inv))
        row_weight_failures += c.row_weights()[0] < 2

    failing = 0
    for c in centers:
        for c2 in centers_prime:
            if c == c2 or not balls_intersect(c, c2, R):
                failing += 1
    return StickySetAudit(
        sticky=failing == 0,
        centers_m=len(centers),
        centers_m_prime=len(centers_prime),
        pairs_checked=len(centers) * len(centers_prime),
        lemma_failures=lemma_failures,
        row_weight_failures=row_weight_failures,
        failing_pairs=failing,
    )


def verify_sticky_set(cert: StickySetCert, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff no two disjoint ``R``-balls avoiding ``B(R)`` cover ``{m, m'}``
    (and no single avoiding ball covers both)."""
    return audit_sticky_set(cert, budget).sticky


def _space_of(S: Iterable[NrtMatrix]) -> Space | None:
    for x in S:
        return space_for(*x.shape)
    return None


def _closure_mask(space: Space, member: np.ndarray, R: int) -> np.ndarray:
    offsets = space.ball_offsets(R)
    # meets[c]: ball B(c, R) contains a point of S
    meets = np.zeros(space.size, dtype=bool)
    for off in offsets:
        meets |= member[space.add(np.arange(space.size), off)]
    # p is in the closure iff every ball containing p meets S; balls containing p have centers in B(p, R)
    closed = np.ones(space.size, dtype=bool)
    for off in offsets:
        closed &= meets[space.add(np.arange(space.size), off)]
    return closed


def r_closure(S: AbstractSet[NrtMatrix], R: int, budget: int = DEFAULT_BUDGET) -> Set[NrtMatrix]:
    """``{p : every R-ball containing p also contains a point of S}``."""
    space = _space_of(S)
    if space is None:
        return set()
    check_budget(space.size, budget)
    member = np.zeros(space.size, dtype=bool)
    for x in S:
        member[space.index(x)] = True
    closed = _closure_mask(space, member, R)
    return {space.matrix(int(k)) for k in np.flatnonzero(closed)}


def is_r_closed(S: AbstractSet[NrtMatrix], R: int, budget: int = DEFAULT_BUDGET) -> bool:
    return r_closure(S, R, budget) == set(S)


def zero_ball(params: Params) -> FrozenSet[NrtMatrix]:
    """``B(R)`` around the zero matrix as a set."""
    return frozenset(iter_ball(NrtMatrix.zeros(params.q, params.s, params.r), params.R))


def sticky_vectors(params: Params, budget: int = DEFAULT_BUDGET) -> Set[NrtMatrix]:
    """All ``R``-sticky vectors of ``B(R)``: ``cl_R(B(R)) \\ B(R)``."""
    ball = zero_ball(params)
    return r_closure(ball, params.R, budget) - ball

