"""Classification of the positive rational solutions of x^y = y^(m x).

Writing y = x^r with r = a/b in lowest terms and k = |a - b|, a solution
exists exactly when, for d = gcd(b, m) and m' = m/d, both a m' = u^k and
b/d = v^k are k-th powers. Then

    u^k - m v^k = m' (a - b) = +-m' k,

and the solution is x = (u/v)^(k b/(a - b)), y = (u/v)^(k a/(a - b)).
Solutions are grouped by k: k = 0 is (1, 1), k = 1 two parametric families,
k = 2 Pell equations, k >= 3 Thue equations.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator

from . import thue
from .arith import divisors, is_square, rational_power_is_rational, valuation
from .pell import PellFamily, fundamental_unit, representatives, s2_empty_by_lemma
from .verify import TRIVIAL, PowerSolution, verify_power_solution

__all__ = [
    "BackMapRejected",
    "BackMapTrace",
    "Candidate",
    "ClassifyConfig",
    "EulerFamily",
    "S2Element",
    "S2Family",
    "SolutionSet",
    "back_map",
    "candidates",
    "classify",
    "classify_s2",
    "k_bound",
    "oracle_scan",
    "s1_families",
]

S2_INFINITE = "infinite"
S2_SEARCH_EXHAUSTED = "representative-search"

REJECT_DIVISIBILITY = "divisibility"
REJECT_COPRIMALITY = "coprimality"
REJECT_D_MISMATCH = "d-mismatch"


def k_bound(m: int) -> int:
    """Largest exponent k that can carry a solution with k >= 3.

    Uses k < 600 for m = 2 and k < 10676 log m (natural log) otherwise.
    """
    if m < 2:
        raise ValueError("classification needs m >= 2")
    if m == 2:
        return 600
    return math.floor(10676 * math.log(m))


@dataclass(frozen=True)
class Candidate:
    m: int
    k: int
    d: int
    m_prime: int
    sign: int

    @property
    def target(self) -> int:
        return self.sign * self.m_prime * self.k

    @classmethod
    def from_target(cls, m: int, k: int, c: int) -> Candidate:
        m_prime, rem = divmod(abs(c), k)
        if rem or m_prime == 0 or m % m_prime:
            raise ValueError(f"{c} is not of the form +-(m/d) k for m = {m}, k = {k}")
        return cls(m, k, m // m_prime, m_prime, 1 if c > 0 else -1)


def candidates(m: int, k: int) -> list[Candidate]:
    if m < 2 or k < 1:
        raise ValueError("need m >= 2 and k >= 1")
    return [
        Candidate(m, k, d, m // d, s)
        for d in divisors(m)
        for s in (1, -1)
    ]


@dataclass(frozen=True)
class BackMapTrace:
    u: int
    v: int
    a: int
    b: int
    candidate: Candidate


class BackMapRejected(ValueError):
    """An integer solution of the key equation that yields no rational (x, y)."""

    def __init__(self, reason: str, trace: BackMapTrace | None, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.trace = trace


def back_map_trace(c: Candidate, u: int, v: int) -> BackMapTrace:
    if u < 1 or v < 1:
        raise ValueError("u and v must be positive")
    if u**c.k - c.m * v**c.k != c.target:
        raise ValueError(f"({u}, {v}) does not satisfy u^{c.k} - {c.m} v^{c.k} = {c.target}")
    a, rem = divmod(u**c.k, c.m_prime)
    b = c.d * v**c.k
    trace = BackMapTrace(u, v, a, b, c)
    if rem:
        raise BackMapRejected(REJECT_DIVISIBILITY, trace, f"{c.m_prime} does not divide {u}^{c.k}")
    return trace


def back_map(c: Candidate, u: int, v: int) -> PowerSolution:
    """Rational solution carried by an integer solution (u, v) of the key equation.

    Raises BackMapRejected when a = u^k/m' is not integral, gcd(a, b) > 1,
    or gcd(b, m) differs from d.
    """
    trace = back_map_trace(c, u, v)
    a, b = trace.a, trace.b
    if math.gcd(a, b) != 1:
        raise BackMapRejected(REJECT_COPRIMALITY, trace, f"gcd({a}, {b}) = {math.gcd(a, b)}")
    if math.gcd(b, c.m) != c.d:
        raise BackMapRejected(REJECT_D_MISMATCH, trace, f"gcd({b}, {c.m}) != {c.d}")
    diff = a - b
    return PowerSolution(Fraction(u, v), c.k * b // diff, c.k * a // diff)


# --------------------------------------------------------------------------
# k = 1

@dataclass(frozen=True)
class EulerFamily:
    """x = (m + m/n)^n, y = (m + m/n)^(n+1) for n >= 1 (plus branch), or
    x = (m - m/n)^(-n), y = (m - m/n)^(1-n) for n >= 2 (minus branch)."""

    m: int
    branch: str

    @property
    def n_min(self) -> int:
        return 1 if self.branch == "plus" else 2

    def element(self, n: int) -> PowerSolution:
        if n < self.n_min:
            raise ValueError(f"n must be >= {self.n_min} on the {self.branch} branch")
        if self.branch == "plus":
            return PowerSolution(Fraction(self.m * (n + 1), n), n, n + 1)
        return PowerSolution(Fraction(self.m * (n - 1), n), -n, 1 - n)

    def elements(self, n_max: int) -> list[PowerSolution]:
        return [self.element(n) for n in range(self.n_min, n_max + 1)]


def s1_families(m: int) -> list[EulerFamily]:
    if m < 1:
        raise ValueError("m must be positive")
    return [EulerFamily(m, "plus"), EulerFamily(m, "minus")]


# --------------------------------------------------------------------------
# k = 2

@dataclass(frozen=True)
class S2Element:
    u: int
    v: int
    solution: PowerSolution


@dataclass(frozen=True)
class S2Family:
    """One Pell class u^2 - m v^2 = target, filtered through back_map."""

    candidate: Candidate
    family: PellFamily
    elements: tuple[S2Element, ...]

    def iter_elements(self) -> Iterator[S2Element]:
        """Every element of the class that survives back-mapping, in order."""
        x, y = self.family.rep.x0, self.family.rep.y0
        while True:
            if x >= 1 and y >= 1:
                try:
                    yield S2Element(x, y, back_map(self.candidate, x, y))
                except BackMapRejected:
                    pass
            x, y = self.family.element_after(x, y)


def _orbit_period(family: PellFamily, modulus: int) -> int:
    start = (family.rep.x0 % modulus, family.rep.y0 % modulus)
    x, y = start
    j = 0
    while True:
        x, y = family.element_after(x, y)
        x, y = x % modulus, y % modulus
        j += 1
        if (x, y) == start:
            return j


def _passes(c: Candidate, u: int, v: int) -> bool:
    try:
        back_map(c, u, v)
    except BackMapRejected:
        return False
    return True


def classify_s2(m: int, count: int = 5) -> tuple[list[S2Family], str]:
    """Surviving Pell families for k = 2 and the verdict for S_2(m).

    The verdict is a lemma tag, ``infinite``, or ``representative-search``
    when the complete representative lists leave nothing.
    """
    reason = s2_empty_by_lemma(m)
    if reason is not None:
        return [], reason
    # a square m has even 2-adic valuation and odd part = 1 mod 4
    assert not is_square(m)
    unit = fundamental_unit(m)
    modulus = 2 ** (valuation(2, m) + 3)
    out = []
    for cand in candidates(m, 2):
        for rep in representatives(m, cand.target):
            fam = PellFamily(rep, unit)
            # whether back_map accepts an element depends only on the parity
            # of a and b, i.e. on (u, v) mod `modulus`; the orbit is periodic
            period = _orbit_period(fam, modulus)
            x, y = rep.x0, rep.y0
            alive = False
            for _ in range(period):
                x, y = fam.element_after(x, y)
                if _passes(cand, x, y):
                    alive = True
                    break
            if not alive:
                continue
            s2 = S2Family(cand, fam, ())
            elems = []
            for e in s2.iter_elements():
                elems.append(e)
                if len(elems) >= count:
                    break
            out.append(replace(s2, elements=tuple(elems)))
    return out, (S2_INFINITE if out else S2_SEARCH_EXHAUSTED)


# --------------------------------------------------------------------------
# full classification

@dataclass(frozen=True)
class ClassifyConfig:
    k_min: int = 3
    k_max: int | None = None
    sieve_n_max: int = thue.DEFAULT_N_MAX
    search_bound: int = thue.DEFAULT_SEARCH_BOUND
    families_count: int = 5
    workers: int = 1


@dataclass(frozen=True)
class Rejection:
    u: int
    v: int
    k: int
    c: int
    reason: str


@dataclass(frozen=True)
class SolutionSet:
    m: int
    s0: PowerSolution
    s1: tuple[EulerFamily, ...]
    s2: tuple[S2Family, ...]
    s2_verdict: str
    sporadics: tuple[PowerSolution, ...]
    unresolved: tuple[thue.ThueEquation, ...]
    k_range: tuple[int, int]
    config: ClassifyConfig
    survivors: tuple[tuple[int, tuple[int, ...]], ...] = ()
    rejected: tuple[Rejection, ...] = ()

    @property
    def complete(self) -> bool:
        return not self.unresolved

    def survivor_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.survivors)

    def solutions_within(self, uv_max: int, k_max: int) -> set[tuple[int, int, int, int]]:
        """Keys of every listed solution whose base u/v has u, v <= uv_max and k <= k_max."""
        keys = {self.s0.key}

        def small(sol):
            return sol.base.numerator <= uv_max and sol.base.denominator <= uv_max

        if k_max >= 1:
            for fam in self.s1:
                n = fam.n_min
                # base denominator is n / gcd(n, m(n +- 1)) >= n / m
                while n <= uv_max * self.m:
                    sol = fam.element(n)
                    if small(sol):
                        keys.add(sol.key)
                    n += 1
        if k_max >= 2:
            for fam in self.s2:
                for e in fam.iter_elements():
                    if e.u > uv_max:
                        break
                    if e.v <= uv_max:
                        keys.add(e.solution.key)
        for sol in self.sporadics:
            if small(sol) and abs(sol.e_y - sol.e_x) <= k_max:
                keys.add(sol.key)
        return keys


def _decide_k(args):
    k, m, n_max, bound = args
    return thue.decide(k, m, n_max=n_max, search_bound=bound)


def classify(m: int, config: ClassifyConfig | None = None) -> SolutionSet:
    """S_0, S_1, S_2 and the sporadic solutions for k_min <= k <= k_max."""
    config = config or ClassifyConfig()
    if m < 2:
        raise ValueError("classification needs m >= 2; use the euler listing for m = 1")
    k_max = config.k_max if config.k_max is not None else k_bound(m)
    k_min = max(3, config.k_min)
    s2, verdict = classify_s2(m, config.families_count)

    jobs = [(k, m, config.sieve_n_max, config.search_bound) for k in range(k_min, k_max + 1)]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            outcomes = list(pool.map(_decide_k, jobs, chunksize=64))
    else:
        outcomes = [_decide_k(j) for j in jobs]

    seen = {TRIVIAL.key}
    sporadics, unresolved, survivors, rejected = [], [], [], []
    for out in outcomes:
        if out.survivors:
            survivors.append((out.k, out.survivors))
        unresolved.extend(out.unresolved_equations)
        for u, v, c in out.solutions:
            cand = Candidate.from_target(m, out.k, c)
            try:
                sol = back_map(cand, u, v)
            except BackMapRejected as exc:
                rejected.append(Rejection(u, v, out.k, c, exc.reason))
                continue
            if not verify_power_solution(sol, m):
                raise AssertionError(f"back-mapped solution {sol} fails verification")
            if sol.key not in seen:
                seen.add(sol.key)
                sporadics.append(sol)

    return SolutionSet(
        m=m,
        s0=TRIVIAL,
        s1=tuple(s1_families(m)),
        s2=tuple(s2),
        s2_verdict=verdict,
        sporadics=tuple(sporadics),
        unresolved=tuple(unresolved),
        k_range=(k_min, k_max),
        config=config,
        survivors=tuple(survivors),
        rejected=tuple(rejected),
    )


# --------------------------------------------------------------------------
# brute-force oracle (tests only)

def oracle_scan(m: int, u_max: int, k_max: int) -> list[PowerSolution]:
    """Brute-force every coprime (u, v) <= u_max and k <= k_max.

    Built directly from the derivation: read off r = a/b, insist it is in
    lowest terms with |a - b| = k, and take x = (m a/b)^(b/(a-b)) through its
    k-th root, which must be rational.
    """
    found = {}
    divs = divisors(m)
    for k in range(1, k_max + 1):
        for u in range(1, u_max + 1):
            uk = u**k
            for v in range(1, u_max + 1):
                if math.gcd(u, v) != 1:
                    continue
                diff = uk - m * v**k
                for d in divs:
                    if abs(diff) != (m // d) * k or (uk * d) % m:
                        continue
                    a, b = uk * d // m, d * v**k
                    if math.gcd(a, b) != 1 or abs(a - b) != k:
                        continue
                    rho = rational_power_is_rational(Fraction(m * a, b), Fraction(1, k))
                    if rho is None:
                        continue
                    sol = PowerSolution(rho, k * b // (a - b), k * a // (a - b))
                    if verify_power_solution(sol, m):
                        found.setdefault(sol.key, sol)
    return [found[key] for key in sorted(found)]
