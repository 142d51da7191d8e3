import pytest
from hypothesis import given, settings, strategies as st

from xymx.hasse import (
    CANDIDATE_FAILURE,
    GLOBALLY_SOLVABLE,
    LOCAL_OBSTRUCTION,
    global_solutions,
    hasse_scan,
    local_solvable,
)


def _primitive_scan(k, m, c, q, p):
    return any(
        (x**k - m * y**k - c) % q == 0 for x in range(q) for y in range(q) if x % p or y % p
    )


def test_local_solvable_fixtures():
    assert local_solvable(3, 2, 47, 7, 2).solvable
    with pytest.raises(ValueError):
        local_solvable(3, 2, 5, 9)
    rep = local_solvable(2, 3, 2, 3)
    assert not rep.solvable and (rep.p, rep.e) == (3, 1)
    assert not _primitive_scan(2, 3, 2, 3, 3)
    with pytest.raises(ValueError):
        local_solvable(3, 2, 47, 7, 9)  # 7^9 beyond the residue-scan cap


@settings(max_examples=150, deadline=None)
@given(
    st.integers(2, 7),
    st.integers(2, 20),
    st.integers(-60, 60).filter(bool),
    st.sampled_from([(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (11, 1), (13, 1)]),
)
def test_local_solvable_matches_pair_scan(k, m, c, pe):
    p, e = pe
    assert local_solvable(k, m, c, p, e).solvable == _primitive_scan(k, m, c, p**e, p)


def test_global_solutions():
    assert (2, 1) in global_solutions(3, 2, 6, 100)
    assert (63, 50) in global_solutions(3, 2, 47, 100)
    assert 63**3 - 2 * 50**3 == 47
    # y = 0 and sign flips
    assert (2, 0) in global_solutions(3, 5, 8, 10)
    assert (-1, -1) in global_solutions(3, 2, 1, 10)
    for x, y in global_solutions(4, 3, 13, 50):
        assert x**4 - 3 * y**4 == 13


def test_skolem_equation_has_an_integer_point():
    v = hasse_scan(3, 2, 47, 100, 10**5, 10**4)
    assert v.kind == GLOBALLY_SOLVABLE
    x, y = v.witness
    assert x**3 - 2 * y**3 == 47


def test_hasse_fixtures():
    assert hasse_scan(3, 5, 15, 100, 10**5, 10**4).kind == CANDIDATE_FAILURE
    v = hasse_scan(3, 2, 6, 100, 10**5, 10**4)
    assert v.kind == GLOBALLY_SOLVABLE and v.witness == (2, 1)
    v = hasse_scan(2, 3, 2)
    assert v.kind == LOCAL_OBSTRUCTION and not v.report.solvable


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(2, 10), st.integers(-40, 40).filter(bool))
def test_hasse_verdicts_are_consistent(k, m, c):
    v = hasse_scan(k, m, c, prime_cap=20, exp_cap=2000, global_bound=200)
    if v.kind == GLOBALLY_SOLVABLE:
        x, y = v.witness
        assert x**k - m * y**k == c
    elif v.kind == LOCAL_OBSTRUCTION:
        assert not _primitive_scan(k, m, c, v.report.p**v.report.e, v.report.p)
        assert global_solutions(k, m, c, 200) == []
    else:
        assert global_solutions(k, m, c, 200) == []
