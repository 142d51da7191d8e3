"""Hot residue loops, in numba and in plain numpy.

Both implementations of every kernel are importable (``NUMPY_KERNELS``,
``NUMBA_KERNELS``) so they can be cross-checked and benchmarked. The module
level names dispatch to numba unless it is missing or ``XYMX_DISABLE_NUMBA``
is set to a truthy value.

All kernels keep operands below 2**31 before multiplying, so int64 products
never overflow.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

# Two primes just below 2**31 used to filter Thue-search candidates.
FILTER_PRIMES = np.array([2147483647, 2147483629], dtype=np.int64)


def _env_disabled() -> bool:
    return os.environ.get("XYMX_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")


# --------------------------------------------------------------------------
# numpy path

def _np_powmod(base, exp, mod):
    """Elementwise ``base**exp % mod`` for an int64 array ``base``."""
    base = np.asarray(base, dtype=np.int64) % mod
    result = np.ones_like(base)
    while exp:
        if exp & 1:
            result = result * base % mod
        exp >>= 1
        if exp:
            base = base * base % mod
    return result


def np_cyclic_orbit(h, count, p):
    out = np.ones(1, dtype=np.int64)
    while out.size < count:
        step = pow(int(h), int(out.size), int(p))
        out = np.concatenate((out, out * step % p))
    return out[:count]


def np_targets_hit(residues, p, m, targets):
    residues = np.asarray(residues, dtype=np.int64)
    targets = np.asarray(targets, dtype=np.int64) % p
    mr = residues * (m % p) % p
    z = (targets[:, None] + mr[None, :]) % p
    idx = np.searchsorted(residues, z)
    idx[idx == residues.size] = 0
    return (residues[idx] == z).any(axis=1)


def np_difference_set(residues, m, p):
    residues = np.asarray(residues, dtype=np.int64)
    mr = residues * (m % p) % p
    return np.unique((residues[:, None] - mr[None, :]) % p)


def np_thue_candidates(k, m, c, theta, v_lo, v_hi):
    v = np.arange(v_lo, v_hi, dtype=np.int64)
    u0 = np.rint(v.astype(np.float64) * theta).astype(np.int64)
    keep = np.zeros((3, v.size), dtype=bool)
    for P in FILTER_PRIMES:
        P = int(P)
        rhs = (m % P * _np_powmod(v % P, k, P) + c % P) % P
        for j, delta in enumerate((-1, 0, 1)):
            lhs = _np_powmod((u0 + delta) % P, k, P)
            hit = lhs == rhs
            keep[j] = hit if P == FILTER_PRIMES[0] else keep[j] & hit
    js, idx = np.nonzero(keep)
    return v[idx], u0[idx] + js - 1


def np_has_primitive_solution(k, m, c, p, q):
    x = np.arange(q, dtype=np.int64)
    pk = _np_powmod(x, k, q)
    unit = x % p != 0
    any_x = np.zeros(q, dtype=bool)
    any_x[pk] = True
    unit_x = np.zeros(q, dtype=bool)
    unit_x[pk[unit]] = True
    r = (c % q + (m % q) * pk) % q
    return bool(np.any(np.where(unit, any_x[r], unit_x[r])))


NUMPY_KERNELS = SimpleNamespace(
    cyclic_orbit=np_cyclic_orbit,
    targets_hit=np_targets_hit,
    difference_set=np_difference_set,
    thue_candidates=np_thue_candidates,
    has_primitive_solution=np_has_primitive_solution,
)


# --------------------------------------------------------------------------
# numba path

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    njit = None

NUMBA_KERNELS = None

if njit is not None:

    @njit(cache=True)
    def _nb_powmod(base, exp, mod):
        result = 1
        base %= mod
        while exp > 0:
            if exp & 1:
                result = result * base % mod
            exp >>= 1
            base = base * base % mod
        return result

    @njit(cache=True)
    def nb_cyclic_orbit(h, count, p):
        out = np.empty(count, dtype=np.int64)
        x = 1
        for i in range(count):
            out[i] = x
            x = x * h % p
        return out

    @njit(cache=True)
    def _nb_contains(sorted_arr, value):
        lo = 0
        hi = sorted_arr.size
        while lo < hi:
            mid = (lo + hi) >> 1
            if sorted_arr[mid] < value:
                lo = mid + 1
            else:
                hi = mid
        return lo < sorted_arr.size and sorted_arr[lo] == value

    @njit(cache=True)
    def _nb_targets_hit(residues, p, m, targets):
        mp = m % p
        out = np.zeros(targets.size, dtype=np.bool_)
        for i in range(targets.size):
            t = targets[i] % p
            for j in range(residues.size):
                if _nb_contains(residues, (t + mp * residues[j]) % p):
                    out[i] = True
                    break
        return out

    def nb_targets_hit(residues, p, m, targets):
        return _nb_targets_hit(
            np.asarray(residues, dtype=np.int64), p, m, np.asarray(targets, dtype=np.int64)
        )

    @njit(cache=True)
    def _nb_difference_set(residues, m, p):
        seen = np.zeros(p, dtype=np.bool_)
        mp = m % p
        for a in residues:
            for b in residues:
                seen[(a - mp * b) % p] = True
        return np.nonzero(seen)[0].astype(np.int64)

    def nb_difference_set(residues, m, p):
        return _nb_difference_set(np.asarray(residues, dtype=np.int64), m, p)

    @njit(cache=True)
    def _nb_thue_candidates(k, m, c, theta, v_lo, v_hi, primes):
        vs = []
        us = []
        for v in range(v_lo, v_hi):
            u0 = np.int64(np.rint(v * theta))
            for delta in (-1, 0, 1):
                u = u0 + delta
                ok = True
                for P in primes:
                    rhs = (m % P * _nb_powmod(v % P, k, P) + c % P) % P
                    if _nb_powmod(u % P, k, P) != rhs:
                        ok = False
                        break
                if ok:
                    vs.append(v)
                    us.append(u)
        out_v = np.empty(len(vs), dtype=np.int64)
        out_u = np.empty(len(us), dtype=np.int64)
        for i in range(len(vs)):
            out_v[i] = vs[i]
            out_u[i] = us[i]
        return out_v, out_u

    def nb_thue_candidates(k, m, c, theta, v_lo, v_hi):
        # fold big m, c into int64 range; only residues mod FILTER_PRIMES matter
        P0 = int(FILTER_PRIMES[0]) * int(FILTER_PRIMES[1])
        return _nb_thue_candidates(k, m % P0, c % P0, theta, v_lo, v_hi, FILTER_PRIMES)

    @njit(cache=True)
    def nb_has_primitive_solution(k, m, c, p, q):
        pk = np.empty(q, dtype=np.int64)
        any_x = np.zeros(q, dtype=np.bool_)
        unit_x = np.zeros(q, dtype=np.bool_)
        for x in range(q):
            r = _nb_powmod(x, k, q)
            pk[x] = r
            any_x[r] = True
            if x % p != 0:
                unit_x[r] = True
        cq = c % q
        mq = m % q
        for y in range(q):
            r = (cq + mq * pk[y]) % q
            if y % p != 0:
                if any_x[r]:
                    return True
            elif unit_x[r]:
                return True
        return False

    NUMBA_KERNELS = SimpleNamespace(
        cyclic_orbit=nb_cyclic_orbit,
        targets_hit=nb_targets_hit,
        difference_set=nb_difference_set,
        thue_candidates=nb_thue_candidates,
        has_primitive_solution=nb_has_primitive_solution,
    )


def active_kernels() -> SimpleNamespace:
    if NUMBA_KERNELS is None or _env_disabled():
        return NUMPY_KERNELS
    return NUMBA_KERNELS


def backend() -> str:
    return "numpy" if active_kernels() is NUMPY_KERNELS else "numba"
