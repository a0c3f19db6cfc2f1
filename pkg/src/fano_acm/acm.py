"""Admissibility, forced invariants and explicit witnesses for rank >= 3.

A rank-r bundle without intermediate cohomology that has no trivial summand,
at least r sections, none after twisting by O(-1), and r-1 sections with a
curve as dependency locus, exists on V_d exactly when

    r/d <= c1 <= r        (admissibility)

and then its remaining Chern classes are forced:

    c2 = d c1^2/2 + r - d c1/2
    c3 = -2 c1 + c1 r - d c1^2/2 + d c1^3/6 + d c1/3.

witness() realizes every strictly admissible (r, c1) as an explicit direct
sum of catalog blocks: by census-table lookup for r <= 7, and for r >= 8 by
peeling off S_E(1) (when c1 = r), S_C(1) (when c1 >= (r-2)/d + 1) or the
rank-d block with c1 = 1 (otherwise).  oracle_enumerate() independently
brute-forces all such sums; every sum it finds carries the forced classes.

The relaxed admissibility mode widens the lower bound to (r-1)/d <= c1
(dropping the section-count hypothesis); no witness is attempted there, and
existence is reported as unknown.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import (
    BlockId,
    Decomposition,
    Family,
    _block_rank_c1,
    block_available,
    table1_rows,
)
from .chow import (
    ChernData,
    FanoThreefold,
    curve_invariants,
    forced_c2,
    forced_c3,
)

__all__ = [
    "InvalidRank",
    "NotAdmissible",
    "BoundExceeded",
    "AdmissibleTriple",
    "forced_c2",
    "forced_c3",
    "admissible",
    "enumerate_admissible",
    "make_triple",
    "witness",
    "validate_witness",
    "Check",
    "ValidationReport",
    "oracle_enumerate",
    "ORACLE_DEFAULT_BOUND",
]


class InvalidRank(ValueError):
    """Rank below 3 where the higher-rank machinery applies."""


class NotAdmissible(ValueError):
    """A query outside the admissible range r/d <= c1 <= r."""


class BoundExceeded(ValueError):
    """Brute-force enumeration requested above its configured bound."""


@dataclass(frozen=True)
class AdmissibleTriple:
    """An admissible (d, r, c1) with its forced classes and curve data."""

    d: int
    rank: int
    c1: int
    c2: int
    c3: int
    curve_degree: int
    curve_genus: int

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "rank": self.rank,
            "c1": self.c1,
            "c2": self.c2,
            "c3": self.c3,
            "curve_degree": self.curve_degree,
            "curve_genus": self.curve_genus,
        }

    def chern(self) -> ChernData:
        return ChernData(self.rank, self.c1, self.c2, self.c3)


def _check_rank(rank: int) -> None:
    if rank < 3:
        raise InvalidRank(f"rank must be >= 3, got {rank}")


def admissible(X: FanoThreefold, rank: int, c1: int, relaxed: bool = False) -> bool:
    """Whether (d, r, c1) is admissible: r/d <= c1 <= r, or with the relaxed
    lower bound (r-1)/d <= c1.  Comparisons are exact (cross-multiplied)."""
    _check_rank(rank)
    lower = rank - 1 if relaxed else rank
    return lower <= X.d * c1 and c1 <= rank


def make_triple(X: FanoThreefold, rank: int, c1: int) -> AdmissibleTriple:
    """The triple at (d, r, c1) with forced classes and curve invariants
    filled in.  The formulas are total; admissibility is the caller's call."""
    degree, genus = curve_invariants(X, rank, c1)
    return AdmissibleTriple(
        X.d,
        rank,
        c1,
        forced_c2(X, rank, c1),
        forced_c3(X, rank, c1),
        degree,
        genus,
    )


def enumerate_admissible(
    X: FanoThreefold, rank: int, relaxed: bool = False
) -> list[AdmissibleTriple]:
    """All admissible triples at this rank, ascending in c1."""
    _check_rank(rank)
    lower = rank - 1 if relaxed else rank
    c1_min = -(-lower // X.d)  # ceil(lower / d); lower >= 2 > 0
    return [make_triple(X, rank, c1) for c1 in range(c1_min, rank + 1)]


# Rank-d block with c1 = 1, used by the third peeling case.
_RANK_D_BLOCK = {3: Family.F31, 4: Family.F41, 5: Family.F51}

_SC1 = BlockId(Family.SC, 1)
_SE1 = BlockId(Family.SE, 1)


def _base_witness(X: FanoThreefold, rank: int, c1: int) -> Decomposition:
    # r <= 7: the census table covers every strictly admissible (r, c1)
    for row in table1_rows():
        if row.rank == rank and row.c1 == c1 and X.d in row.d_set:
            return row.decomposition
    raise AssertionError(f"no census row for d={X.d}, r={rank}, c1={c1}")


def witness(X: FanoThreefold, rank: int, c1: int) -> Decomposition:
    """An explicit direct sum of catalog blocks with the forced invariants
    at (d, r, c1).  Raises NotAdmissible outside the strict range."""
    _check_rank(rank)
    if not admissible(X, rank, c1):
        if X.d * c1 < rank:
            reason = f"r/d ≤ c1 fails ({rank}/{X.d} > {c1})"
        else:
            reason = f"c1 ≤ r fails ({c1} > {rank})"
        raise NotAdmissible(f"not admissible: {reason}")
    return _witness(X, rank, c1)


def _witness(X: FanoThreefold, rank: int, c1: int) -> Decomposition:
    assert admissible(X, rank, c1), (X.d, rank, c1)
    if rank <= 7:
        return _base_witness(X, rank, c1)
    if c1 == rank:
        rest = _witness(X, rank - 2, rank - 2)
        return Decomposition(rest.blocks + (_SE1,))
    if X.d * (c1 - 1) >= rank - 2:  # c1 >= (r-2)/d + 1, exactly
        rest = _witness(X, rank - 2, c1 - 1)
        return Decomposition(rest.blocks + (_SC1,))
    rest = _witness(X, rank - X.d, c1 - 1)
    return Decomposition(rest.blocks + (BlockId(_RANK_D_BLOCK[X.d]),))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def validate_witness(
    X: FanoThreefold, dec: Decomposition, rank: int, c1: int
) -> ValidationReport:
    """Check a decomposition against the target (d, r, c1): block
    availability, rank sum, c1 sum, forced (c2, c3), no trivial summands."""
    unavailable = sorted(
        {b.family.value for b in dec.blocks if not block_available(b.family, X)}
    )
    total = dec.chern(X)
    fc2 = forced_c2(X, rank, c1)
    fc3 = forced_c3(X, rank, c1)
    trivial = [b for b in dec.blocks if b.family is Family.OV]
    checks = (
        Check(
            "availability",
            not unavailable,
            "all blocks available on %s" % X
            if not unavailable
            else "not available on %s: %s" % (X, ", ".join(unavailable)),
        ),
        Check("rank", total.rank == rank, f"rank sum {total.rank}, target {rank}"),
        Check("c1", total.c1 == c1, f"c1 sum {total.c1}, target {c1}"),
        Check(
            "c2_c3_forced",
            (total.c2, total.c3) == (fc2, fc3),
            f"c2 {total.c2} vs forced {fc2}, c3 {total.c3} vs forced {fc3}",
        ),
        Check(
            "no_trivial_summands",
            not trivial,
            "no trivial summands" if not trivial else f"{len(trivial)} trivial summand(s)",
        ),
    )
    return ValidationReport(checks)


ORACLE_DEFAULT_BOUND = 12

# Blocks eligible as witness summands: everything satisfying the forced-class
# identities at its own (rank, c1).  O_V is excluded (trivial summands are
# forbidden) and so is S_L, whose c2 = 1 differs from the forced value 2 at
# (r, c1) = (2, 0); no witness ever uses it.
_ORACLE_FAMILIES = (
    Family.F31,
    Family.F32,
    Family.F33,
    Family.F41,
    Family.F51,
    Family.F72,
)


def _oracle_blocks(X: FanoThreefold) -> list[BlockId]:
    blocks = [_SC1, _SE1]
    blocks += [BlockId(f) for f in _ORACLE_FAMILIES if block_available(f, X)]
    return sorted(blocks, key=BlockId.sort_key)


def oracle_enumerate(
    X: FanoThreefold, rank: int, c1: int, bound: int = ORACLE_DEFAULT_BOUND
) -> list[Decomposition]:
    """All multisets of eligible blocks with rank sum r and c1 sum c1,
    by exhaustive search.  Raises BoundExceeded for rank above ``bound``."""
    if rank > bound:
        raise BoundExceeded(f"rank {rank} exceeds the enumeration bound {bound}")
    candidates = [(b, *_block_rank_c1(b)) for b in _oracle_blocks(X)]
    found: list[Decomposition] = []

    def search(start: int, r_left: int, c1_left: int, chosen: list[BlockId]) -> None:
        if r_left == 0:
            if c1_left == 0:
                found.append(Decomposition(tuple(chosen)))
            return
        for i in range(start, len(candidates)):
            b, br, bc1 = candidates[i]
            if br > r_left:
                continue
            chosen.append(b)
            search(i, r_left - br, c1_left - bc1, chosen)
            chosen.pop()

    search(0, rank, c1, [])
    return sorted(found, key=Decomposition.sort_key)
