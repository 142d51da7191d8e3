"""Exact checks of x^y = y^(m x) for solutions of the form x = s^ex, y = s^ey.

Taking logs, x^y = y^(m x) becomes s^ey * ex * log s = m * s^ex * ey * log s,
i.e. the rational identity s^(ey - ex) * ex = m * ey whenever s != 1. The
difference ey - ex is small (it is +-k), so nothing astronomically large is
ever expanded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import is_kth_power, perfect_power_root

__all__ = ["PowerSolution", "TRIVIAL", "expand", "verify_power_solution"]


@dataclass(frozen=True)
class PowerSolution:
    """The pair x = base**e_x, y = base**e_y."""

    base: Fraction
    e_x: int
    e_y: int

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        if self.base <= 0:
            raise ValueError("base must be positive")

    @property
    def is_trivial(self) -> bool:
        return self.base == 1

    def oriented(self) -> PowerSolution:
        """Same (x, y) written with nonnegative exponents."""
        if self.e_x < 0 or (self.e_x == 0 and self.e_y < 0):
            return PowerSolution(1 / self.base, -self.e_x, -self.e_y)
        return self

    def canonical(self) -> PowerSolution:
        """Same (x, y) with positive exponents and a base that is not a perfect power."""
        if self.is_trivial:
            return TRIVIAL
        o = self.oriented()
        base, ex, ey = o.base, o.e_x, o.e_y
        g = 0
        for part in (base.numerator, base.denominator):
            if part > 1:
                g = math.gcd(g, perfect_power_root(part)[1])
        if g > 1:
            root = Fraction(is_kth_power(base.numerator, g), is_kth_power(base.denominator, g))
            base, ex, ey = root, ex * g, ey * g
        return PowerSolution(base, ex, ey)

    @property
    def key(self) -> tuple[int, int, int, int]:
        c = self.canonical()
        return c.base.numerator, c.base.denominator, c.e_x, c.e_y

    def __str__(self) -> str:
        c = self.oriented()
        if c.is_trivial:
            return "(1, 1)"

        def fmt(e):
            b = str(c.base.numerator) if c.base.denominator == 1 else f"({c.base})"
            return b if e == 1 else f"{b}^{e}"

        return f"({fmt(c.e_x)}, {fmt(c.e_y)})"


TRIVIAL = PowerSolution(Fraction(1), 1, 1)


def verify_power_solution(sol: PowerSolution, m: int) -> bool:
    """True iff x = base^e_x, y = base^e_y satisfy x^y = y^(m x) exactly."""
    if sol.is_trivial:
        return True
    if sol.e_x == 0:
        raise ValueError("e_x = 0 with a nontrivial base gives x = 1, y != 1")
    return sol.base ** (sol.e_y - sol.e_x) * sol.e_x == m * sol.e_y


def _digits_estimate(base: Fraction, e: int) -> float:
    return abs(e) * math.log10(max(base.numerator, base.denominator))


def expand(sol: PowerSolution, digit_limit: int) -> tuple[Fraction, Fraction] | None:
    """Literal (x, y) when every numerator/denominator has at most ``digit_limit`` digits."""
    if digit_limit < 1:
        raise ValueError("digit_limit must be >= 1")
    if sol.is_trivial:
        return Fraction(1), Fraction(1)
    est = max(_digits_estimate(sol.base, sol.e_x), _digits_estimate(sol.base, sol.e_y))
    if est > digit_limit + 1:
        return None
    x, y = sol.base ** sol.e_x, sol.base ** sol.e_y
    for part in (x.numerator, x.denominator, y.numerator, y.denominator):
        if len(str(part)) > digit_limit:
            return None
    return x, y
