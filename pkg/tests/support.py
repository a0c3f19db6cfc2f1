"""Shared helpers: independent oracles and pseudo-random data generators.

Every oracle here recomputes a quantity along a different route than the
library code it checks (direct polynomial evaluation, brute-force scans,
finite differences, chi bookkeeping over exact sequences).
"""

from __future__ import annotations

import random
from fractions import Fraction

from fano_acm import (
    ChernData,
    FanoThreefold,
    chi_twist,
    euler_char,
    forced_c2,
    forced_c3,
)

ALL_D = (3, 4, 5)
VARIETIES = tuple(FanoThreefold(d) for d in ALL_D)


def chi_line_poly(d: int, t: int) -> Fraction:
    """chi(O(t)) evaluated directly from the cubic d t^3/6 + d t^2/2 + (d+3) t/3 + 1."""
    return (
        Fraction(d * t**3, 6)
        + Fraction(d * t**2, 2)
        + Fraction((d + 3) * t, 3)
        + 1
    )


def third_difference(f, t0: int = 0) -> Fraction:
    """Third finite difference of f at unit steps: 6 * (leading cubic coefficient)."""
    return f(t0 + 3) - 3 * f(t0 + 2) + 3 * f(t0 + 1) - f(t0)


def genus_via_chi_bookkeeping(X: FanoThreefold, rank: int, c1: int) -> int:
    """Recover the dependency-curve genus from chi bookkeeping over
    0 -> O^{r-1} -> F -> I_D(c1) -> 0, using only euler_char/chi_twist:

        chi(F) = (r-1) chi(O) + chi(O(c1)) - (c1 deg + 1 - genus)

    with F carrying the forced Chern classes and deg = forced c2.
    """
    line = ChernData.trivial(1)
    deg = forced_c2(X, rank, c1)
    F = ChernData(rank, c1, deg, forced_c3(X, rank, c1))
    genus = (
        1
        + c1 * deg
        - ((rank - 1) * euler_char(line, X) + chi_twist(line, X, c1) - euler_char(F, X))
    )
    assert genus.denominator == 1
    return int(genus)


def brute_force_splits(d: int, c1: int, c2: int, span: int = 250) -> list[tuple[int, int]]:
    """All (a, b) with a >= b, a + b = c1 and d a b = c2, by scanning a."""
    out = []
    for a in range(-span, span + 1):
        b = c1 - a
        if a >= b and d * a * b == c2:
            out.append((a, b))
    return out


def random_chern(rng: random.Random, max_rank: int = 6, spread: int = 40) -> ChernData:
    rank = rng.randint(0, max_rank)
    if rank == 0:
        return ChernData(0, 0, 0, 0)
    c1 = rng.randint(-spread, spread)
    c2 = 0 if rank == 1 else rng.randint(-spread, spread)
    c3 = 0 if rank <= 2 else rng.randint(-spread, spread)
    return ChernData(rank, c1, c2, c3)
