"""Exact integer and rational primitives.

Everything here works on Python's unbounded ``int`` and on
``fractions.Fraction``, which already keeps values in lowest terms with a
positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

__all__ = [
    "CFExpansion",
    "Rational",
    "divisors",
    "factorize",
    "gcd",
    "iroot",
    "is_kth_power",
    "is_prime",
    "is_square",
    "modpow",
    "perfect_power_root",
    "rational_power_is_rational",
    "sqrt_cf",
    "valuation",
]


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def valuation(p: int, x: int) -> int:
    """Exponent of ``p`` in ``x``: the largest ``e`` with ``p**e | x``."""
    if p < 2:
        raise ValueError(f"valuation base must be >= 2, got {p}")
    if x == 0:
        raise ValueError("valuation of 0 is infinite")
    x = abs(x)
    if p == 2:
        return (x & -x).bit_length() - 1
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def iroot(x: int, k: int) -> int:
    """Floor of the real ``k``-th root of ``x >= 0``.

    Integer Newton iteration started above the root; the iterates decrease
    monotonically until they stop, at which point the floor has been reached.
    """
    if x < 0:
        raise ValueError("iroot needs x >= 0")
    if k < 1:
        raise ValueError("iroot needs k >= 1")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return math.isqrt(x)
    if k >= x.bit_length():
        # 2**k > x, so the root is 1
        return 1
    r = 1 << -(-x.bit_length() // k)
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    # final exactness adjustment
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def is_kth_power(x: int, k: int) -> int | None:
    """Return ``r`` with ``r**k == x`` if one exists (``x >= 1``), else None."""
    if x < 0:
        raise ValueError("is_kth_power needs x >= 0")
    r = iroot(x, k)
    return r if r ** k == x else None


def is_square(x: int) -> bool:
    return x >= 0 and math.isqrt(x) ** 2 == x


def rational_power_is_rational(base: Fraction, exp: Fraction) -> Fraction | None:
    """Exact value of ``base**exp`` when it is rational, else None.

    With ``exp = a/b`` in lowest terms the power is rational exactly when
    numerator and denominator of ``base`` are both ``b``-th powers.
    """
    base = Fraction(base)
    exp = Fraction(exp)
    if base <= 0:
        raise ValueError("base must be positive")
    a, b = exp.numerator, exp.denominator
    num = is_kth_power(base.numerator, b)
    if num is None:
        return None
    den = is_kth_power(base.denominator, b)
    if den is None:
        return None
    return Fraction(num, den) ** a


def perfect_power_root(x: int) -> tuple[int, int]:
    """Write ``x >= 2`` as ``r**e`` with ``e`` maximal; returns ``(r, e)``."""
    if x < 2:
        raise ValueError("perfect_power_root needs x >= 2")
    for e in range(x.bit_length(), 1, -1):
        r = is_kth_power(x, e)
        if r is not None:
            return r, e
    return x, 1


def modpow(base: int, exp: int, modulus: int) -> int:
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if exp < 0:
        raise ValueError("exponent must be >= 0")
    return pow(base, exp, modulus)


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin.

    The first twelve primes as witnesses are known to be sufficient for every
    n < 3.3e24, which covers the full unsigned 64-bit range.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; intended for small n (sieve moduli)."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for q in (f, f + 2):
            while n % q == 0:
                out[q] = out.get(q, 0) + 1
                n //= q
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n``, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


@dataclass(frozen=True)
class CFExpansion:
    """Periodic continued fraction ``sqrt(D) = [a0; period, period, ...]``."""

    a0: int
    period: tuple[int, ...]


def sqrt_cf(D: int) -> CFExpansion:
    if D < 2:
        raise ValueError(f"sqrt_cf needs D >= 2, got {D}")
    a0 = math.isqrt(D)
    if a0 * a0 == D:
        raise ValueError(f"{D} is a perfect square")
    period = []
    m, d, a = 0, 1, a0
    while a != 2 * a0:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        period.append(a)
    return CFExpansion(a0, tuple(period))
