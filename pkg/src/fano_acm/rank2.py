"""Decision procedure for rank-2 invariants on V_d.

Up to twist, the indecomposable rank-2 bundles without intermediate
cohomology are exactly S_L, S_C and S_E; decomposable ones are sums of two
line bundles.  Given (d, c1, c2) this module decides which of those models
(if any) carries these invariants.

The procedure is purely numerical: it answers "which classified bundle has
these invariants", never "is a given bundle ACM" (the latter is a
cohomological question outside the scope of this library).  Twists are found
by exact parity/solve steps, never by a bounded scan, so arbitrarily large
inputs are handled correctly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import BlockId, Family, block_chern
from .chow import ChernData, FanoThreefold, twist, whitney_sum

__all__ = [
    "TwistOf",
    "SplitLineBundles",
    "NoACMBundle",
    "NO_ACM_BUNDLE",
    "Rank2Verdict",
    "classify_rank2",
]

_MODEL_FAMILIES = (Family.SL, Family.SC, Family.SE)


@dataclass(frozen=True)
class TwistOf:
    """The query invariants belong to family(t) for a unique twist t."""

    family: Family  # SL, SC or SE
    twist: int

    @property
    def kind(self) -> str:
        return f"TwistOf{self.family.name}"

    def chern(self, X: FanoThreefold) -> ChernData:
        return twist(block_chern(BlockId(self.family, 0), X), X, self.twist)

    def render(self) -> str:
        return BlockId(self.family, self.twist).render()

    def to_json(self) -> dict:
        return {"kind": self.kind, "twist": self.twist}


@dataclass(frozen=True)
class SplitLineBundles:
    """The query invariants belong to O(a) + O(b), a >= b."""

    a: int
    b: int

    kind = "split"

    def chern(self, X: FanoThreefold) -> ChernData:
        return whitney_sum(
            ChernData.line_bundle(self.a), ChernData.line_bundle(self.b), X
        )

    def render(self) -> str:
        return f"O({self.a}) ⊕ O({self.b})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class NoACMBundle:
    """No bundle without intermediate cohomology has the query invariants."""

    kind = "none"

    def to_json(self) -> dict:
        return {"kind": self.kind}


NO_ACM_BUNDLE = NoACMBundle()

Rank2Verdict = TwistOf | SplitLineBundles | NoACMBundle


def _match_model(X: FanoThreefold, family: Family, c1: int, c2: int) -> int | None:
    # Solve c1 = m1 + 2t exactly, then check the twisted c2.
    base = block_chern(BlockId(family, 0), X)
    if (c1 - base.c1) % 2:
        return None
    t = (c1 - base.c1) // 2
    if twist(base, X, t).c2 == c2:
        return t
    return None


def _match_split(X: FanoThreefold, c1: int, c2: int) -> tuple[int, int] | None:
    # a + b = c1 and d a b = c2: integer roots of x^2 - c1 x + c2/d.
    if c2 % X.d:
        return None
    q = c2 // X.d
    disc = c1 * c1 - 4 * q
    if disc < 0:
        return None
    s = math.isqrt(disc)
    if s * s != disc or (c1 + s) % 2:
        return None
    return ((c1 + s) // 2, (c1 - s) // 2)


def classify_rank2(X: FanoThreefold, c1: int, c2: int) -> Rank2Verdict:
    """Decide which rank-2 model on V_d has invariants (c1, c2).

    Tries the twists of S_L (c1 even, c2 = 1 + d t^2 at c1 = 2t), of S_C
    (c1 odd) and of S_E (c1 even), then the split pair O(a) + O(b).  The
    four families are disjoint (c2 mod d separates split from the models,
    parity separates S_C, and S_L/S_E twists differ by 1 in c2), so the
    first match is the only one.
    """
    for family in _MODEL_FAMILIES:
        t = _match_model(X, family, c1, c2)
        if t is not None:
            return TwistOf(family, t)
    ab = _match_split(X, c1, c2)
    if ab is not None:
        return SplitLineBundles(*ab)
    return NO_ACM_BUNDLE
