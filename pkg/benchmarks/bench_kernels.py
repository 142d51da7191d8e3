"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is called once per backend before timing so numba compilation
is excluded. Results are cross-checked for equality.
"""

from __future__ import annotations

import argparse
import os
import time

import numpy as np

from xymx import _kernels
from xymx.arith import is_prime
from xymx.thue import _residue_array, decide


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b) if isinstance(a, np.ndarray) else a == b


def cases():
    # largest sieve prime 2nk + 1 for k = 13 at the default n_max = 200
    p13 = max(p for p in (2 * n * 13 + 1 for n in range(1, 201)) if is_prime(p))
    res = _residue_array(13, p13)
    targets = np.arange(-60, 61, dtype=np.int64)
    theta3 = 2 ** (1 / 3)
    theta7 = 3 ** (1 / 7)
    return [
        (f"targets_hit k=13 p={p13}", "targets_hit", (res, p13, 2, targets)),
        (f"difference_set k=13 p={p13}", "difference_set", (res, 2, p13)),
        ("cyclic_orbit p=99991", "cyclic_orbit", (7, 99990 // 6, 99991)),
        ("thue_candidates k=3 2^18 v", "thue_candidates", (3, 2, -3, theta3, 10**5, 10**5 + (1 << 18))),
        ("thue_candidates k=7 2^18 v", "thue_candidates", (7, 3, 21, theta7, 10**5, 10**5 + (1 << 18))),
        ("has_primitive_solution 3^10", "has_primitive_solution", (9, 2, 18, 3, 3**10)),
        ("has_primitive_solution 2^16", "has_primitive_solution", (5, 2, 10, 2, 2**16)),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    nb = _kernels.NUMBA_KERNELS
    np_k = _kernels.NUMPY_KERNELS
    if nb is None:
        print("numba is not installed; only the numpy path is available")
    print(f"{'kernel':40s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for label, name, call_args in cases():
        f_np = getattr(np_k, name)
        t_np, out_np = _best(lambda: f_np(*call_args), args.repeat)
        if nb is None:
            print(f"{label:40s} {t_np * 1e3:9.2f}ms {'-':>10s} {'-':>8s}")
            continue
        f_nb = getattr(nb, name)
        f_nb(*call_args)  # compile
        t_nb, out_nb = _best(lambda: f_nb(*call_args), args.repeat)
        if name == "thue_candidates":
            agree = sorted(zip(*map(np.ndarray.tolist, out_np))) == sorted(zip(*map(np.ndarray.tolist, out_nb)))
        else:
            agree = _same(out_np, out_nb)
        flag = "" if agree else "  MISMATCH"
        print(f"{label:40s} {t_np * 1e3:9.2f}ms {t_nb * 1e3:9.2f}ms {t_np / t_nb:7.1f}x{flag}")

    # end to end: one survivor-heavy exponent through sieve, local stage and search
    timings = {}
    for flag in ("1", "0"):
        os.environ["XYMX_DISABLE_NUMBA"] = flag
        decide(7, 3, search_bound=10**4)  # warm up
        timings[_kernels.backend()], _ = _best(lambda: decide(7, 3, search_bound=10**6), 1)
    os.environ.pop("XYMX_DISABLE_NUMBA")
    if "numba" in timings:
        t_np, t_nb = timings["numpy"], timings["numba"]
        print(f"{'decide(k=7, m=3, bound 1e6)':40s} {t_np * 1e3:9.0f}ms {t_nb * 1e3:9.0f}ms {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
