"""Existence verdicts for non-trivial perfect codes with parameters ``(q, s, r, R)``.

Rules are tried in a fixed order and the first that decides wins:

1. ``R == 0`` or ``R >= s*r``: only trivial codes (``TrivialOnly``).
2. ``s == 1``: graph-of-a-function codes exist.
3. ``r == 1`` (Hamming space, prime-power ``q``): the repetition / Hamming /
   Golay parameter table; anything else is ruled out.
4. ``s >= 2`` and ``delta >= 1``, or ``s, r >= 2`` and ``delta == 0``: ruled out.
5. ``s == R + 2`` and ``R >= 2``: ruled out.
6. ``|B(R)|`` does not divide ``q^(s*r)``: ruled out by counting.
7. ``R == 1``, ``r >= 2`` and a perfect 1-code exists in ``Z_q^{s x 1}``:
   lifting that code exists.
8. Otherwise ``Unknown``.

When several non-existence rules apply, the first is reported and all are
listed in ``Verdict.all_reasons``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from .codes import (
    Code,
    construct_hamming,
    construct_repetition,
    construct_s1,
    is_prime,
    lift_trivial,
    repetition_radius,
)
from .core import Params
from .enumeration import ball_volume


class Outcome(enum.Enum):
    TRIVIAL_ONLY = "TrivialOnly"
    EXISTS_CONSTRUCTIVE = "ExistsConstructive"
    NONEXISTENT = "Nonexistent"
    UNKNOWN = "Unknown"


class Reason(enum.Enum):
    ZERO_RADIUS = "ZeroRadius"
    BALL_COVERS_SPACE = "BallCoversSpace"
    SINGLE_CHAIN = "SingleChain"
    RADIUS_ONE_CLASSIFICATION = "RadiusOneClassification"
    DELTA_NONNEGATIVE = "DeltaNonnegative"
    S_EQUALS_R_PLUS_TWO = "SEqualsRPlusTwo"
    DIVISIBILITY = "Divisibility"
    LIFTING = "Lifting"
    OPEN = "Open"


NONEXISTENCE_REASONS = frozenset({
    Reason.DELTA_NONNEGATIVE,
    Reason.S_EQUALS_R_PLUS_TWO,
    Reason.RADIUS_ONE_CLASSIFICATION,
    Reason.DIVISIBILITY,
})

CITATIONS = {
    Reason.ZERO_RADIUS: "radius 0: the only perfect code is the whole space",
    Reason.BALL_COVERS_SPACE: "B(R) is the whole space: only single-word codes",
    Reason.SINGLE_CHAIN: "s = 1: C_f = {(f(y), y)} is R-perfect for any f",
    Reason.RADIUS_ONE_CLASSIFICATION: "r = 1: Tietavainen classification of perfect Hamming-metric codes",
    Reason.DELTA_NONNEGATIVE: "delta >= 0: B(R) has a sticky vector (delta >= 1) or a two-point sticky set (delta = 0)",
    Reason.S_EQUALS_R_PLUS_TWO: "s = R + 2, R >= 2: projection to Perf(s, R, R) with delta = 0",
    Reason.DIVISIBILITY: "counting: |C| * |B(R)| = q^(s*r) forces |B(R)| | q^(s*r)",
    Reason.LIFTING: "Perf(s, R, R) nonempty implies Perf(s, r, R) nonempty for r > R (lifting)",
    Reason.OPEN: "no applicable existence or non-existence criterion",
}


def delta(s: int, r: int, R: int) -> int:
    """``(r+1)(R+1) - s*r - 1``, equivalently ``r*(R+1-s) + R``."""
    value = (r + 1) * (R + 1) - s * r - 1
    assert value == r * (R + 1 - s) + R
    return value


def prime_power_base(q: int) -> Optional[int]:
    """The prime ``p`` with ``q = p^k``, or ``None`` if ``q`` is not a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return None


def hamming_exponent(q: int, s: int) -> Optional[int]:
    """``i >= 2`` with ``s = (q^i - 1)/(q - 1)``, if any."""
    i, length = 2, q + 1
    while length < s:
        i += 1
        length = length * q + 1
    return i if length == s else None


@dataclass(frozen=True)
class Recipe:
    """How to build a perfect code for a verdict.

    ``kind`` is one of ``s1``, ``repetition``, ``hamming``, ``golay_binary``,
    ``golay_ternary`` or ``lift``; ``base`` is the ``r = 1`` recipe a lift
    starts from and ``h`` the number of appended columns.
    """

    kind: str
    q: int
    s: int
    r: int
    R: int
    i: Optional[int] = None
    h: Optional[int] = None
    base: Optional["Recipe"] = None

    @property
    def executable(self) -> bool:
        if self.kind in ("s1", "repetition"):
            return True
        if self.kind == "hamming":
            return is_prime(self.q)
        if self.kind == "lift":
            return self.base is not None and self.base.executable
        return False

    def build(self) -> Code:
        if self.kind == "s1":
            return construct_s1(lambda y: (0,) * self.R, Params(self.q, self.s, self.r, self.R))
        if self.kind == "repetition":
            return construct_repetition(self.s)
        if self.kind == "hamming":
            return construct_hamming(self.q, self.i)
        if self.kind == "lift":
            return lift_trivial(self.base.build(), self.h, self.R)
        raise NotImplementedError(f"no construction available for {self.kind!r} codes")

    def describe(self) -> str:
        if self.kind == "lift":
            return f"lift: {self.base.describe()}, h={self.h}"
        if self.kind == "hamming":
            return f"hamming, i={self.i}"
        return self.kind

    def as_dict(self) -> dict:
        d = {"kind": self.kind, "q": self.q, "s": self.s, "r": self.r, "R": self.R}
        if self.i is not None:
            d["i"] = self.i
        if self.h is not None:
            d["h"] = self.h
        if self.base is not None:
            d["base"] = self.base.as_dict()
        return d


@dataclass(frozen=True)
class Verdict:
    params: Params
    outcome: Outcome
    reason: Reason
    recipe: Optional[Recipe] = None
    all_reasons: Tuple[Reason, ...] = field(default=())

    @property
    def citation(self) -> str:
        return CITATIONS[self.reason]

    def summary(self) -> str:
        """One-line rendering, e.g. ``Nonexistent (DeltaNonnegative, δ=1)``."""
        p = self.params
        if self.outcome is Outcome.EXISTS_CONSTRUCTIVE:
            return f"{self.outcome.value} ({self.recipe.describe()})"
        if self.reason is Reason.DELTA_NONNEGATIVE:
            return f"{self.outcome.value} ({self.reason.value}, δ={p.delta})"
        if self.reason is Reason.DIVISIBILITY:
            vol = ball_volume(p)
            return f"{self.outcome.value} ({self.reason.value}: {vol} ∤ {p.space_size})"
        return f"{self.outcome.value} ({self.reason.value})"

    def as_dict(self) -> dict:
        p = self.params
        vol = ball_volume(p)
        return {
            "q": p.q, "s": p.s, "r": p.r, "R": p.R,
            "delta": p.delta,
            "t": p.t,
            "ball_volume": vol,
            "divides": p.space_size % vol == 0,
            "outcome": self.outcome.value,
            "reason": self.reason.value,
            "all_reasons": [x.value for x in self.all_reasons],
            "citation": self.citation,
            "recipe": None if self.recipe is None else self.recipe.as_dict(),
        }


def _radius_one_recipe(q: int, s: int, R: int) -> Optional[Recipe]:
    """Perfect-code parameters in ``Z_q^{s x 1}`` (prime-power ``q``), or ``None``."""
    if q == 2 and s % 2 == 1 and s >= 3 and R == repetition_radius(s):
        return Recipe("repetition", q, s, 1, R)
    if R == 1:
        i = hamming_exponent(q, s)
        if i is not None:
            return Recipe("hamming", q, s, 1, R, i=i)
    if (q, s, R) == (2, 23, 3):
        return Recipe("golay_binary", q, s, 1, R)
    if (q, s, R) == (3, 11, 2):
        return Recipe("golay_ternary", q, s, 1, R)
    return None


def _nonexistence_reasons(p: Params, prime_power: bool) -> List[Reason]:
    reasons = []
    if p.r == 1 and prime_power and _radius_one_recipe(p.q, p.s, p.R) is None:
        reasons.append(Reason.RADIUS_ONE_CLASSIFICATION)
    if p.s >= 2 and (p.delta >= 1 or (p.delta == 0 and p.r >= 2)):
        reasons.append(Reason.DELTA_NONNEGATIVE)
    if p.s == p.R + 2 and p.R >= 2:
        reasons.append(Reason.S_EQUALS_R_PLUS_TWO)
    if p.space_size % ball_volume(p) != 0:
        reasons.append(Reason.DIVISIBILITY)
    return reasons


def verdict(q: int, s: int, r: int, R: int) -> Verdict:
    p = Params(q, s, r, R)
    if R == 0:
        return Verdict(p, Outcome.TRIVIAL_ONLY, Reason.ZERO_RADIUS)
    if R >= s * r:
        return Verdict(p, Outcome.TRIVIAL_ONLY, Reason.BALL_COVERS_SPACE)
    if s == 1:
        return Verdict(p, Outcome.EXISTS_CONSTRUCTIVE, Reason.SINGLE_CHAIN,
                       recipe=Recipe("s1", q, s, r, R))

    prime_power = prime_power_base(q) is not None
    if r == 1 and prime_power:
        recipe = _radius_one_recipe(q, s, R)
        if recipe is not None:
            return Verdict(p, Outcome.EXISTS_CONSTRUCTIVE, Reason.RADIUS_ONE_CLASSIFICATION, recipe=recipe)

    reasons = _nonexistence_reasons(p, prime_power)
    if reasons:
        return Verdict(p, Outcome.NONEXISTENT, reasons[0], all_reasons=tuple(reasons))

    if R == 1 and r >= 2 and prime_power:
        base = _radius_one_recipe(q, s, 1)
        if base is not None:
            recipe = Recipe("lift", q, s, r, R, h=r - 1, base=base)
            return Verdict(p, Outcome.EXISTS_CONSTRUCTIVE, Reason.LIFTING, recipe=recipe)

    return Verdict(p, Outcome.UNKNOWN, Reason.OPEN)


def scan_params(q: int, s_max: int, r_max: int, R_max: int) -> Iterator[Params]:
    """Non-trivial tuples ``1 <= R < s*r``, lexicographic in ``(s, r, R)``."""
    for s in range(1, s_max + 1):
        for r in range(1, r_max + 1):
            for R in range(1, min(R_max, s * r - 1) + 1):
                yield Params(q, s, r, R)


def scan(q: int, s_max: int, r_max: int, R_max: int) -> List[Verdict]:
    if min(q - 1, s_max, r_max, R_max) < 1:
        raise ValueError("scan bounds must be >= 1 and q >= 2")
    return [verdict(p.q, p.s, p.r, p.R) for p in scan_params(q, s_max, r_max, R_max)]
