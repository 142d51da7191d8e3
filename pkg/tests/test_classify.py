import math
from fractions import Fraction

import pytest

from xymx.arith import rational_power_is_rational
from xymx.classify import (
    BackMapRejected,
    Candidate,
    ClassifyConfig,
    EulerFamily,
    back_map,
    back_map_trace,
    candidates,
    classify,
    classify_s2,
    k_bound,
    oracle_scan,
    s1_families,
)
from xymx.verify import PowerSolution, expand, verify_power_solution


def test_k_bound():
    assert k_bound(2) == 600
    assert k_bound(3) == 11728
    with pytest.raises(ValueError):
        k_bound(1)


def test_candidate_targets():
    assert sorted(c.target for c in candidates(2, 3)) == [-6, -3, 3, 6]
    assert sorted(c.target for c in candidates(3, 5)) == [-15, -5, 5, 15]
    assert sorted(c.target for c in candidates(2, 2)) == [-4, -2, 2, 4]
    assert Candidate.from_target(2, 3, -3) == Candidate(2, 3, 2, 1, -1)


def test_back_map_fixtures():
    sol = back_map(Candidate(2, 3, 2, 1, -1), 5, 4)
    assert (sol.base, sol.e_x, sol.e_y) == (Fraction(5, 4), -128, -125)
    assert verify_power_solution(sol, 2)
    assert str(sol) == "((4/5)^128, (4/5)^125)"

    sol = back_map(Candidate(2, 3, 1, 2, 1), 2, 1)
    assert (sol.base, sol.e_x, sol.e_y) == (Fraction(2), 1, 4)
    assert expand(sol, 10) == (2, 16)

    with pytest.raises(BackMapRejected) as exc:
        back_map(Candidate(3, 3, 3, 1, 1), 3, 2)
    assert exc.value.reason == "coprimality"
    assert (exc.value.trace.a, exc.value.trace.b) == (27, 24)
    assert math.gcd(27, 24) == 3


def test_back_map_trace_invariants():
    seen_ok = seen_bad = 0
    for m in range(2, 13):
        for k in range(1, 5):
            for cand in candidates(m, k):
                for v in range(1, 41):
                    t = cand.target + m * v**k
                    if t <= 0:
                        continue
                    u = round(t ** (1 / k))
                    for uu in (u - 1, u, u + 1):
                        if uu < 1 or uu**k != t:
                            continue
                        try:
                            sol = back_map(cand, uu, v)
                        except BackMapRejected as exc:
                            seen_bad += 1
                            tr = exc.trace
                            if exc.reason == "coprimality":
                                assert math.gcd(tr.a, tr.b) > 1
                            elif exc.reason == "d-mismatch":
                                assert math.gcd(tr.b, m) != cand.d
                            continue
                        seen_ok += 1
                        tr = back_map_trace(cand, uu, v)
                        assert tr.a * cand.m_prime == uu**k
                        assert tr.b == cand.d * v**k
                        assert math.gcd(tr.a, tr.b) == 1
                        assert abs(tr.a - tr.b) == k
                        assert math.gcd(tr.b, m) == cand.d
                        assert verify_power_solution(sol, m)
    assert seen_ok and seen_bad


def test_s1_fixtures():
    plus, minus = s1_families(2)
    assert expand(plus.element(1), 10) == (4, 16)
    assert 4**16 == 16**8
    assert minus.element(2).is_trivial
    plus3, _ = s1_families(3)
    assert expand(plus3.element(1), 10) == (6, 36)
    assert 6**36 == 36**18
    with pytest.raises(ValueError):
        minus.element(1)


@pytest.mark.parametrize("m", [2, 3, 5])
@pytest.mark.parametrize("branch", ["plus", "minus"])
def test_s1_elements_verify(m, branch):
    fam = EulerFamily(m, branch)
    for sol in fam.elements(50):
        assert verify_power_solution(sol, m)


def test_euler_m1():
    fam = EulerFamily(1, "plus")
    assert expand(fam.element(1), 10) == (2, 4)
    assert expand(fam.element(2), 10) == (Fraction(9, 4), Fraction(27, 8))


def test_classify_s2_fixtures():
    assert classify_s2(2) == ([], "parity-lemma")
    assert classify_s2(5) == ([], "mod4-lemma")
    assert classify_s2(39) == ([], "representative-search")
    fams, verdict = classify_s2(3)
    assert verdict == "infinite"
    got = {(f.candidate.target, f.family.rep.x0, f.family.rep.y0) for f in fams}
    assert got == {(-2, 1, 1), (6, 3, 1)}
    for f in fams:
        for e in f.elements:
            assert verify_power_solution(e.solution, 3)


def test_classify_m27_k5():
    s = classify(27, ClassifyConfig(k_min=5, k_max=5))
    keys = {x.key for x in s.sporadics}
    assert PowerSolution(Fraction(2), 27, 32).key in keys
    assert 2**5 * 27 == 27 * 32


def test_oracle_scan_fixtures():
    got = {s.key for s in oracle_scan(2, 10, 3)}
    assert PowerSolution(Fraction(2), 1, 4).key in got
    assert PowerSolution(Fraction(5, 4), -128, -125).key in got

    got3 = {s.key for s in oracle_scan(3, 10, 3)}
    assert PowerSolution(Fraction(1), 1, 1).key in got3
    assert PowerSolution(Fraction(5, 3), -27, -25).key in got3
    # the cubic pair (3, 2) fails coprimality, so no k = 3 solution with base 3/2
    assert PowerSolution(Fraction(3, 2), 24, 27).key not in got3
    assert all(abs(ey - ex) != 3 for _, _, ex, ey in got3)

    assert all(abs(s.e_y - s.e_x) != 2 for s in oracle_scan(4, 10, 3))


def _ab_oracle(m, ab_max, k_max):
    """Direct enumeration of r = a/b: x = (m a / b)^(b/(a-b)), y = x^r."""
    out = set()
    for a in range(1, ab_max + 1):
        for b in range(1, ab_max + 1):
            k = abs(a - b)
            if k == 0 or k > k_max or math.gcd(a, b) != 1:
                continue
            x = rational_power_is_rational(Fraction(m * a, b), Fraction(b, a - b))
            if x is None:
                continue
            y = rational_power_is_rational(x, Fraction(a, b))
            if y is None:
                continue
            rho = rational_power_is_rational(Fraction(m * a, b), Fraction(1, a - b))
            if rho is None:
                continue
            out.add(PowerSolution(rho, b, a).key)
    return out


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_classify_matches_ab_enumeration(m):
    # every solution with small a, b appears among classify's output at k <= 4
    s = classify(m, ClassifyConfig(k_max=4))
    listed = s.solutions_within(400, 4)
    expected = _ab_oracle(m, 60, 4)
    assert len(expected) > 100
    for key in expected:
        assert key in listed, (m, key)
