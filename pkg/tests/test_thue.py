import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from xymx.arith import is_prime
from xymx.thue import (
    _kernel_start,
    EMPTY_BY_PARITY,
    EMPTY_BY_SIEVE,
    SOLVED,
    UNRESOLVED,
    ThueEquation,
    decide,
    has_primitive_solution,
    key_targets,
    kth_power_residues,
    residue_set,
    search,
    sieve,
    signed_solutions,
    solve_cubic_m2,
)


def _scan_pairs(k, m, p):
    """x^k - m y^k mod p over all p^2 pairs."""
    powers = np.array([pow(x, k, p) for x in range(p)], dtype=np.int64)
    return {int(v) for v in np.unique((powers[:, None] - m * powers[None, :]) % p)}


def _representable(k, m, c, p):
    """Target c mod p reached by some pair (x, y), by direct powering."""
    powers = {pow(x, k, p) for x in range(p)}
    return any((c + m * pow(y, k, p)) % p in powers for y in range(p))


def test_kth_power_residue_fixtures():
    assert kth_power_residues(13, 53) == {0, 1, 23, 30, 52}
    assert kth_power_residues(3, 7) == {0, 1, 6}
    assert kth_power_residues(2, 5) == {0, 1, 4}
    with pytest.raises(ValueError):
        kth_power_residues(3, 11)
    with pytest.raises(ValueError):
        kth_power_residues(3, 49)


def test_residue_set_fixtures():
    paper = {0, 1, 2, 3, 6, 7, 8, 16, 21, 23, 25}
    assert residue_set(13, 2, 53) == {x % 53 for v in paper for x in (v, -v)}
    assert residue_set(13, 2, 53) == _scan_pairs(13, 2, 53)
    assert 5 in residue_set(3, 2, 7)
    assert residue_set(3, 2, 7) == _scan_pairs(3, 2, 7)
    assert residue_set(2, 3, 5) == {(a - 3 * b) % 5 for a in (0, 1, 4) for b in (0, 1, 4)}


@pytest.mark.parametrize("k", [2, 3, 4, 5, 7, 11, 13])
def test_residue_counts(k):
    for p in range(3, 2000):
        if is_prime(p) and (p - 1) % k == 0:
            res = kth_power_residues(k, p)
            assert len(res) == (p - 1) // k + 1
            assert res == {pow(x, k, p) for x in range(p)}


def test_sieve_fixtures():
    (w,) = sieve(13, 2, {13, -13, 26, -26}, 10)
    assert w.p == 53 and w.n == 2
    assert w.eliminated_targets == {13, -13, 26, -26}
    assert sieve(3, 2, {3, -3, 6, -6}, 100) is None
    wit = sieve(5, 2, {5, -5}, 100)
    assert wit is not None
    assert sieve(5, 2, {10, -10}, 100) is None


@pytest.mark.parametrize("k,m", [(13, 2), (5, 2), (17, 3), (9, 2), (19, 5), (6, 3)])
def test_sieve_witnesses_are_sound(k, m):
    wit = sieve(k, m, key_targets(m, k), 200) or []
    for w in wit:
        assert w.p == 2 * w.n * k + 1
        for t in w.eliminated_targets:
            assert not _representable(k, m, t, w.p)


def test_search_fixtures():
    assert search(ThueEquation(3, 2, -3), 10**3) == [(5, 4)]
    assert search(ThueEquation(3, 2, 6), 10**3) == [(2, 1)]
    assert search(ThueEquation(3, 3, 3), 10**3) == [(3, 2)]


def test_signed_solutions_match_naive():
    for k, m, c in [(3, 2, 1), (3, 2, -3), (3, 3, 3), (4, 3, 13), (5, 27, 5), (3, 7, 1)]:
        naive = set()
        for v in range(1, 301):
            for u in range(-2000, 2001):
                if u**k - m * v**k == c:
                    naive.add((u, v))
        assert set(signed_solutions(k, m, c, 300)) == naive, (k, m, c)


def test_search_far_past_the_kernel_threshold():
    # coprime pair with u close to v 2^(1/3), planted where the float-guided kernel runs
    u, v = 1_258_675, 999_011
    c = u**3 - 2 * v**3
    assert v > _kernel_start(3, 2, c)
    assert search(ThueEquation(3, 2, c), 10**6) == [(u, v)]


def test_solve_cubic_fixtures():
    assert solve_cubic_m2(-3) == [(5, 4)]
    assert solve_cubic_m2(6) == [(2, 1)]
    assert solve_cubic_m2(1) == []
    with pytest.raises(ValueError):
        solve_cubic_m2(37)


@pytest.mark.parametrize("c", [c for c in range(-6, 7) if c])
def test_solve_cubic_agrees_with_search(c):
    assert solve_cubic_m2(c) == search(ThueEquation(3, 2, c), 10**4)


def test_cubic_inequality_grid():
    u = np.arange(-500, 501, dtype=np.int64)
    u = u[u != 0]
    v = u.copy()
    f = u[:, None] ** 3 - 2 * v[None, :] ** 3
    assert np.all(f * f >= np.abs(u)[:, None])


def test_has_primitive_solution():
    assert not has_primitive_solution(2, 3, 2, 3)
    assert has_primitive_solution(3, 2, 47, 7, 2)
    # x^9 - 2 y^9 = 18 has no primitive solution mod 9
    assert not has_primitive_solution(9, 2, 18, 3, 2)
    assert not any(
        (x**9 - 2 * y**9 - 18) % 9 == 0 for x in range(9) for y in range(9) if x % 3 or y % 3
    )


def test_decide_fixtures():
    out = decide(13, 2)
    assert out.kind == EMPTY_BY_SIEVE
    assert [w.p for w in out.witnesses] == [53]

    out = decide(3, 2)
    assert out.kind == SOLVED and out.complete
    assert set(out.solutions) == {(5, 4, -3), (2, 1, 6)}

    assert decide(4, 2).kind == EMPTY_BY_PARITY

    out = decide(11, 2, search_bound=10**4)
    assert out.survivors == (-22, 22)
    assert out.kind == UNRESOLVED and out.solutions == ()


def test_decide_perfect_power_is_complete():
    out = decide(3, 8)
    assert out.complete
    for u, v, c in out.solutions:
        assert u**3 - 8 * v**3 == c


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.integers(2, 12))
def test_decide_solutions_satisfy_equation(k, m):
    out = decide(k, m, search_bound=2000)
    for u, v, c in out.solutions:
        assert u**k - m * v**k == c
        assert math.gcd(u, v) == 1
        assert c in out.survivors
    for w in out.witnesses:
        for t in w.eliminated_targets:
            if w.n:
                assert not _representable(k, m, t, w.p)
            else:
                assert not has_primitive_solution(k, m, t, w.p, round(math.log(w.modulus, w.p)))
