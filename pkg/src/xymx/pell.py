"""Generalized Pell equations x^2 - D y^2 = N with D > 0 nonsquare.

Solutions with x + y*sqrt(D) > 0 split into finitely many orbits under
multiplication by the fundamental unit. Each orbit contains exactly one
nonnegative solution whose image under the inverse unit is no longer
nonnegative; those solutions are the representatives returned here, so every
nonnegative solution is ``rep * unit**j`` for exactly one rep and ``j >= 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import is_prime, is_square, sqrt_cf, valuation

__all__ = [
    "PellFamily",
    "PellRep",
    "PellUnit",
    "fundamental_unit",
    "generate",
    "petr",
    "representatives",
    "s2_empty_by_lemma",
]

PARITY_LEMMA = "parity-lemma"
MOD4_LEMMA = "mod4-lemma"


@dataclass(frozen=True)
class PellUnit:
    D: int
    u1: int
    v1: int


@dataclass(frozen=True)
class PellRep:
    x0: int
    y0: int
    D: int
    N: int


@dataclass(frozen=True)
class PellFamily:
    rep: PellRep
    unit: PellUnit

    def element(self, j: int) -> tuple[int, int]:
        x, y = self.rep.x0, self.rep.y0
        for _ in range(j):
            x, y = _mul(x, y, self.unit)
        return x, y

    def element_after(self, x: int, y: int) -> tuple[int, int]:
        return _mul(x, y, self.unit)


def _check_D(D: int) -> None:
    if D < 2 or is_square(D):
        raise ValueError(f"D must be a nonsquare integer >= 2, got {D}")


def _mul(x: int, y: int, unit: PellUnit) -> tuple[int, int]:
    return x * unit.u1 + unit.D * y * unit.v1, x * unit.v1 + y * unit.u1


def _div(x: int, y: int, unit: PellUnit) -> tuple[int, int]:
    return x * unit.u1 - unit.D * y * unit.v1, y * unit.u1 - x * unit.v1


def fundamental_unit(D: int) -> PellUnit:
    """Minimal positive solution of u^2 - D v^2 = 1, read off the continued fraction of sqrt(D)."""
    _check_D(D)
    cf = sqrt_cf(D)
    terms = list(cf.period)
    if len(terms) % 2:
        terms = terms + terms
    # convergent p_{L-1}/q_{L-1} of [a0; terms[:-1]]
    p_prev, p = 1, cf.a0
    q_prev, q = 0, 1
    for a in terms[:-1]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    assert p * p - D * q * q == 1
    return PellUnit(D, p, q)


def _search_bound(unit: PellUnit, N: int) -> int:
    # Nagell: fundamental solutions of a class have
    #   y <= v1 sqrt(N) / sqrt(2 (u1 + 1))       (N > 0)
    #   y <= v1 sqrt(-N) / sqrt(2 (u1 - 1))      (N < 0)
    denom = 2 * (unit.u1 + 1) if N > 0 else 2 * (unit.u1 - 1)
    num = unit.v1 * unit.v1 * abs(N)
    # ceiling of sqrt(num / denom)
    y = math.isqrt(num // denom)
    while y * y * denom < num:
        y += 1
    return y


def _normalize(x: int, y: int, unit: PellUnit) -> tuple[int, int]:
    """Move a solution to the orbit's minimal nonnegative member."""
    # sign of x + y sqrt(D) is the sign of whichever term dominates
    dominant = x if x * x > unit.D * y * y else y
    if dominant < 0:
        x, y = -x, -y
    while x < 0 or y < 0:
        x, y = _mul(x, y, unit)
    while True:
        px, py = _div(x, y, unit)
        if px < 0 or py < 0:
            return x, y
        x, y = px, py


def representatives(D: int, N: int) -> list[PellRep]:
    """Class representatives of x^2 - D y^2 = N, each normalized to x0, y0 >= 0."""
    _check_D(D)
    if N == 0:
        raise ValueError("N must be nonzero")
    unit = fundamental_unit(D)
    found = set()
    for y in range(_search_bound(unit, N) + 1):
        t = N + D * y * y
        if t < 0:
            continue
        x = math.isqrt(t)
        if x * x != t:
            continue
        for sx in {x, -x}:
            found.add(_normalize(sx, y, unit))
    return [PellRep(x, y, D, N) for x, y in sorted(found)]


def generate(family: PellFamily, count: int) -> list[tuple[int, int]]:
    """First ``count`` solutions of the family, increasing in x."""
    x, y = family.rep.x0, family.rep.y0
    out = []
    for _ in range(count):
        out.append((x, y))
        x, y = _mul(x, y, family.unit)
    return out


def s2_empty_by_lemma(m: int) -> str | None:
    """Sufficient criteria for the k = 2 solution set to be empty.

    ``parity-lemma``: the 2-adic valuation of m is odd (k = 2 is even).
    ``mod4-lemma``: the odd part of m is 1 mod 4.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    nu = valuation(2, m)
    if nu % 2:
        return PARITY_LEMMA
    if (m >> nu) % 4 == 1:
        return MOD4_LEMMA
    return None


def petr(p: int) -> int:
    """For a prime p = 3 mod 4, the one N in {+2, -2} with x^2 - p y^2 = N solvable."""
    if p % 4 != 3 or not is_prime(p):
        raise ValueError(f"petr needs a prime p = 3 (mod 4), got {p}")
    signs = [N for N in (2, -2) if representatives(p, N)]
    if len(signs) != 1:
        raise ArithmeticError(f"x^2 - {p} y^2 = +-2: solvable for {signs}, expected exactly one")
    return signs[0]
