"""Flag Thue equations that look like counterexamples to the local-global principle.

An equation x^k - m y^k = c is a candidate when it has primitive solutions
modulo every tested prime power yet no integer solution up to a bound. This
is evidence, not proof: only finitely many prime powers and a bounded window
of integers are examined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_kth_power, is_prime
from .thue import has_primitive_solution, signed_solutions

__all__ = [
    "CANDIDATE_FAILURE",
    "GLOBALLY_SOLVABLE",
    "HasseVerdict",
    "LOCAL_OBSTRUCTION",
    "LocalReport",
    "global_solutions",
    "hasse_scan",
    "local_solvable",
]

GLOBALLY_SOLVABLE = "globally-solvable"
LOCAL_OBSTRUCTION = "local-obstruction"
CANDIDATE_FAILURE = "candidate-hasse-failure"

DEFAULT_LOCAL_CAP = 10**6
DEFAULT_PRIME_CAP = 100
DEFAULT_EXP_CAP = 10**5
DEFAULT_GLOBAL_BOUND = 10**5


@dataclass(frozen=True)
class LocalReport:
    p: int
    e: int
    solvable: bool


@dataclass(frozen=True)
class HasseVerdict:
    kind: str
    witness: tuple[int, int] | None = None
    report: LocalReport | None = None
    prime_cap: int | None = None
    exp_cap: int | None = None
    global_bound: int | None = None


def local_solvable(k: int, m: int, c: int, p: int, e: int = 1, cap: int = DEFAULT_LOCAL_CAP) -> LocalReport:
    """Exhaustive residue scan mod p^e for a solution with p not dividing both x and y."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("e must be >= 1")
    if p**e > cap:
        raise ValueError(f"{p}^{e} exceeds the residue-scan cap {cap}")
    return LocalReport(p, e, has_primitive_solution(k, m, c, p, e))


def global_solutions(k: int, m: int, c: int, bound: int) -> list[tuple[int, int]]:
    """Integer solutions of x^k - m y^k = c with |y| <= bound, any signs."""
    out = set()
    x0 = None
    if c > 0 or k % 2:
        r = is_kth_power(abs(c), k)
        if r is not None:
            x0 = r if c > 0 else -r
            out.add((x0, 0))
            if k % 2 == 0:
                out.add((-x0, 0))
    for x, y in signed_solutions(k, m, c, bound):
        out.add((x, y))
        if k % 2 == 0:
            out.add((x, -y))
    if k % 2:
        # (x, y) -> (-x, -y) flips the sign of c
        for x, y in signed_solutions(k, m, -c, bound):
            out.add((-x, -y))
    return sorted(out, key=lambda xy: (abs(xy[1]), xy))


def _primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def hasse_scan(
    k: int,
    m: int,
    c: int,
    prime_cap: int = DEFAULT_PRIME_CAP,
    exp_cap: int = DEFAULT_EXP_CAP,
    global_bound: int = DEFAULT_GLOBAL_BOUND,
) -> HasseVerdict:
    if min(prime_cap, exp_cap, global_bound) < 1:
        raise ValueError("bounds must be positive")
    found = global_solutions(k, m, c, global_bound)
    if found:
        return HasseVerdict(GLOBALLY_SOLVABLE, witness=found[0])
    for p in _primes_upto(prime_cap):
        e = 1
        while p**e <= exp_cap:
            report = local_solvable(k, m, c, p, e, cap=exp_cap)
            if not report.solvable:
                return HasseVerdict(LOCAL_OBSTRUCTION, report=report)
            e += 1
    return HasseVerdict(
        CANDIDATE_FAILURE, prime_cap=prime_cap, exp_cap=exp_cap, global_bound=global_bound
    )
