"""Thue equations u^k - m v^k = c for k >= 3.

The decision path for one exponent k:

1. the 2-adic parity argument (k even, valuation of m odd) empties the set;
2. a residue sieve over primes p = 2nk + 1, where k-th powers form a small
   subgroup, looks for a prime at which a target c is not of the form
   alpha - m beta with alpha, beta k-th power residues;
3. survivors get the complete cubic treatment when (m, k) = (2, 3), a complete
   factorization bound when m is itself a k-th power, and otherwise an
   exhaustive search up to a bound on v, reported as unresolved unless a
   solution turns up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .arith import divisors, factorize, iroot, is_kth_power, is_prime, valuation

__all__ = [
    "EMPTY_BY_PARITY",
    "EMPTY_BY_SIEVE",
    "ResidueWitness",
    "SOLVED",
    "ThueEquation",
    "ThueOutcome",
    "UNRESOLVED",
    "decide",
    "key_targets",
    "kth_power_residues",
    "residue_set",
    "search",
    "has_primitive_solution",
    "sieve",
    "signed_solutions",
    "solve_cubic_m2",
]

EMPTY_BY_PARITY = "empty-by-parity"
EMPTY_BY_SIEVE = "empty-by-sieve"
SOLVED = "solved"
UNRESOLVED = "unresolved"

DEFAULT_N_MAX = 200
DEFAULT_SEARCH_BOUND = 10**6
LOCAL_MODULUS_CAP = 10**5
_CHUNK = 1 << 18


@dataclass(frozen=True)
class ThueEquation:
    k: int
    m: int
    c: int

    def __str__(self) -> str:
        return f"x^{self.k} - {self.m} y^{self.k} = {self.c}"


@dataclass(frozen=True)
class ResidueWitness:
    """Prime p (= 2nk + 1 when n > 0) modulo whose power ``modulus`` the
    eliminated targets have no primitive representation.

    n = 0 marks a prime dividing k m, checked modulo p^e.
    """

    p: int
    n: int
    eliminated_targets: frozenset
    modulus: int = 0

    def __post_init__(self):
        if not self.modulus:
            object.__setattr__(self, "modulus", self.p)


@dataclass(frozen=True)
class ThueOutcome:
    """Verdict for all targets of one exponent k.

    ``solutions`` holds (u, v, c) triples. ``incomplete`` lists the surviving
    targets whose solution lists are only known up to ``search_bound``.
    """

    kind: str
    k: int
    m: int
    targets: tuple[int, ...]
    witnesses: tuple[ResidueWitness, ...] = ()
    survivors: tuple[int, ...] = ()
    solutions: tuple[tuple[int, int, int], ...] = ()
    complete: bool = True
    incomplete: tuple[int, ...] = ()
    search_bound: int | None = None

    @property
    def unresolved_equations(self) -> list[ThueEquation]:
        return [ThueEquation(self.k, self.m, c) for c in self.incomplete]


def key_targets(m: int, k: int) -> list[int]:
    """The right-hand sides +-(m/d) k over positive divisors d of m, sorted."""
    return sorted({s * (m // d) * k for d in divisors(m) for s in (1, -1)})


# --------------------------------------------------------------------------
# residues

def _check_residue_args(k: int, p: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if (p - 1) % k:
        raise ValueError(f"k = {k} does not divide p - 1 = {p - 1}")


def _residue_array(k: int, p: int) -> np.ndarray:
    """Sorted k-th power residues mod p (including 0) as int64."""
    order = (p - 1) // k
    primes = list(factorize(order)) if order > 1 else []
    for x in range(2, p + 1):
        h = pow(x, k, p)
        if all(pow(h, order // q, p) != 1 for q in primes):
            break
    orbit = _kernels.active_kernels().cyclic_orbit(h, order, p)
    return np.sort(np.concatenate(([0], orbit)).astype(np.int64))


def kth_power_residues(k: int, p: int) -> set[int]:
    """{x^k mod p}; for k | p - 1 it has exactly (p - 1)/k + 1 elements."""
    _check_residue_args(k, p)
    return {int(r) for r in _residue_array(k, p)}


def residue_set(k: int, m: int, p: int) -> set[int]:
    """{x^k - m y^k mod p}, built from the two k-th power residue sets."""
    _check_residue_args(k, p)
    res = _residue_array(k, p)
    return {int(r) for r in _kernels.active_kernels().difference_set(res, m, p)}


def sieve(k: int, m: int, targets, n_max: int = DEFAULT_N_MAX) -> list[ResidueWitness] | None:
    """Witness primes p = 2nk + 1 (n <= n_max) excluding every target, or None.

    Targets are tracked separately, so different primes may exclude different
    targets. None means at least one target is representable modulo every
    prime tried.
    """
    if not targets:
        raise ValueError("sieve needs at least one target")
    witnesses, remaining = _run_sieve(k, m, sorted(set(targets)), n_max)
    return None if remaining else witnesses


def _run_sieve(k, m, remaining, n_max):
    kernels = _kernels.active_kernels()
    witnesses = []
    for n in range(1, n_max + 1):
        if not remaining:
            break
        p = 2 * n * k + 1
        if not is_prime(p):
            continue
        res = _residue_array(k, p)
        hit = kernels.targets_hit(res, p, m, np.array([t % p for t in remaining], dtype=np.int64))
        gone = [t for t, h in zip(remaining, hit) if not h]
        if gone:
            witnesses.append(ResidueWitness(p, n, frozenset(gone)))
            remaining = [t for t, h in zip(remaining, hit) if h]
    return witnesses, remaining


def has_primitive_solution(k: int, m: int, c: int, p: int, e: int = 1) -> bool:
    """Whether x^k - m y^k = c has a solution mod p^e with x, y not both divisible by p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("e must be >= 1")
    q = p**e
    return bool(_kernels.active_kernels().has_primitive_solution(k, m % q, c % q, p, q))


def _run_local(k, m, remaining, cap=LOCAL_MODULUS_CAP):
    # primes dividing k m: residues mod p^e there are invisible to p = 2nk + 1
    witnesses = []
    for p in sorted(factorize(k * m)):
        q, e = p, 1
        while q <= cap and remaining:
            gone = [t for t in remaining if not has_primitive_solution(k, m, t, p, e)]
            if gone:
                witnesses.append(ResidueWitness(p, 0, frozenset(gone), q))
                remaining = [t for t in remaining if t not in gone]
            q, e = q * p, e + 1
    return witnesses, remaining


# --------------------------------------------------------------------------
# global search

def _signed_root(t: int, k: int) -> int | None:
    """Integer r with r^k = t (r >= 0 for even k), or None."""
    if t >= 0:
        return is_kth_power(t, k)
    if k % 2 == 0:
        return None
    r = is_kth_power(-t, k)
    return None if r is None else -r


def _kernel_start(k: int, m: int, c: int) -> int:
    # From here on m v^k - |c| > 0 and the real root of c + m v^k lies within
    # 1/2 of v m^(1/k):  k^k (m v^k - |c|)^(k-1) >= (2|c|)^k.
    a = abs(c)
    v = 1
    while True:
        t = m * v**k - a
        if t > 0 and k**k * t ** (k - 1) >= (2 * a) ** k:
            return v
        v += 1


def signed_solutions(k: int, m: int, c: int, v_bound: int) -> list[tuple[int, int]]:
    """Every integer pair (u, v), 1 <= v <= v_bound, with u^k - m v^k = c.

    Small v are checked directly. Beyond that u must be the integer nearest
    v m^(1/k); those candidates are filtered modulo two large primes by the
    active kernel and then confirmed exactly.
    """
    if k < 1 or v_bound < 1:
        raise ValueError("need k >= 1 and v_bound >= 1")
    out = []
    v0 = min(_kernel_start(k, m, c), v_bound + 1)
    for v in range(1, v0):
        r = _signed_root(c + m * v**k, k)
        if r is not None:
            out.append((r, v))
            if k % 2 == 0 and r > 0:
                out.append((-r, v))
    if v0 <= v_bound:
        if v_bound >= 1 << 40:
            raise ValueError("v_bound too large for the float-guided search")
        theta = float(m) ** (1.0 / k)
        kernels = _kernels.active_kernels()
        for lo in range(v0, v_bound + 1, _CHUNK):
            hi = min(lo + _CHUNK, v_bound + 1)
            vs, us = kernels.thue_candidates(k, m, c, theta, lo, hi)
            for v, u in zip(vs.tolist(), us.tolist()):
                if u > 0 and u**k - m * v**k == c:
                    out.append((u, v))
                    if k % 2 == 0:
                        out.append((-u, v))
    return sorted(set(out), key=lambda uv: (uv[1], uv[0]))


def search(eq: ThueEquation, v_bound: int = DEFAULT_SEARCH_BOUND) -> list[tuple[int, int]]:
    """Coprime solutions with u, v >= 1 and v <= v_bound; exhaustive in that range only."""
    return [
        (u, v)
        for u, v in signed_solutions(eq.k, eq.m, eq.c, v_bound)
        if u >= 1 and math.gcd(u, v) == 1
    ]


def solve_cubic_m2(c: int) -> list[tuple[int, int]]:
    """All coprime u, v >= 1 with u^3 - 2 v^3 = c, for |c| <= 36.

    Complete because |x^3 - 2 y^3| >= sqrt(|x|) for all integers, which
    forces |u| <= c^2.
    """
    if c == 0 or abs(c) > 36:
        raise ValueError("solve_cubic_m2 handles 0 < |c| <= 36")
    out = []
    for u in range(1, c * c + 1):
        t = u**3 - c
        if t % 2:
            continue
        v = _signed_root(t // 2, 3)
        if v is not None and v >= 1 and math.gcd(u, v) == 1:
            out.append((u, v))
    return out


def _iroot_ceil(x: int, k: int) -> int:
    r = iroot(x, k)
    return r if r**k == x else r + 1


@dataclass
class _Survivor:
    c: int
    solutions: list = field(default_factory=list)
    complete: bool = False


def decide(
    k: int,
    m: int,
    targets=None,
    *,
    n_max: int = DEFAULT_N_MAX,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> ThueOutcome:
    """Settle u^k - m v^k = c for every target c (default: all +-(m/d) k)."""
    if k < 3:
        raise ValueError("decide handles k >= 3")
    targets = tuple(sorted(set(targets))) if targets is not None else tuple(key_targets(m, k))
    if k % 2 == 0 and valuation(2, m) % 2 == 1:
        return ThueOutcome(EMPTY_BY_PARITY, k, m, targets)

    witnesses, remaining = _run_sieve(k, m, list(targets), n_max)
    if remaining:
        local, remaining = _run_local(k, m, remaining)
        witnesses += local
    if not remaining:
        return ThueOutcome(EMPTY_BY_SIEVE, k, m, targets, tuple(witnesses))

    root_m = is_kth_power(m, k)
    survivors = []
    for c in remaining:
        s = _Survivor(c)
        if m == 2 and k == 3 and abs(c) <= 36:
            s.solutions, s.complete = solve_cubic_m2(c), True
        elif root_m is not None:
            bound = _iroot_ceil(abs(c), k - 1) // root_m + 1
            s.solutions, s.complete = search(ThueEquation(k, m, c), bound), True
        else:
            s.solutions = search(ThueEquation(k, m, c), search_bound)
        survivors.append(s)

    sols = tuple(sorted((u, v, s.c) for s in survivors for u, v in s.solutions))
    incomplete = tuple(s.c for s in survivors if not s.complete)
    complete = not incomplete
    kind = SOLVED if complete or sols else UNRESOLVED
    return ThueOutcome(
        kind,
        k,
        m,
        targets,
        tuple(witnesses),
        tuple(remaining),
        sols,
        complete,
        incomplete,
        None if complete else search_bound,
    )
