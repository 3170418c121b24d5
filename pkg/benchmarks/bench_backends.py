"""Backend speed comparison: jitted kernels vs the pure-Python path.

Runs the same workloads through domgame._kernels_numba and
domgame._kernels_py and reports mean wall times and the speedup. The
jit path is warmed up (and disk-cached) before timing. Results are
asserted equal while timing, so this doubles as a coarse equivalence
check.

Run:

    python benchmarks/bench_backends.py [--repeats N]
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from domgame import family_build, random_graph
from domgame import _kernels_py as kp

try:
    from domgame import _kernels_numba as kn
    HAVE_NUMBA = True
except ImportError:
    kn = None
    HAVE_NUMBA = False

BUDGET = 10**12


def bench_solve_petersen(mod):
    g = family_build("petersen")
    ca = g.closed_array()
    out = mod.solve_game(ca, 10, 0, 0, BUDGET, False, 4)
    assert out[0] == 5
    return out[0]


def bench_solve_random16(mod):
    total = 0
    for seed in range(8):
        g = random_graph(16, 1, 2, seed)
        ca = g.closed_array()
        total += mod.solve_game(ca, 16, 0, 0, BUDGET, False, 16)[0]
    return total


def bench_value_table(mod):
    g = random_graph(12, 1, 2, 5)
    vd, vs = mod.solve_all(g.closed_array(), 12)
    return int(vd[0]) + int(vs[0])


def bench_scan_n6(mod):
    n, total = 6, 1 << 15
    out_mask = np.zeros(total, dtype=np.uint32)
    cols = [np.zeros(total, dtype=np.int8) for _ in range(9)]
    out_ord = np.zeros(total, dtype=np.int64)
    emitted, connected, nodes, status = mod.scan_labeled(
        n, 0, total, True, 0, 127, False,
        False, False, True, True, True, BUDGET,
        out_mask, *cols, out_ord,
    )
    assert status == 0 and connected == 26704
    return emitted


def bench_rall_n6(mod):
    out = mod.rall_scan(6, 0, 1 << 15, BUDGET)
    assert out[7] == 0 and out[3] == 10077
    return out[3]


WORKLOADS = [
    ("solve petersen", bench_solve_petersen),
    ("solve 8x G(16,1/2)", bench_solve_random16),
    ("value table n=12", bench_value_table),
    ("diam-2 scan n=6", bench_scan_n6),
    ("rall scan n=6", bench_rall_n6),
]


def time_workload(fn, mod, repeats):
    results = []
    check = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(mod)
        results.append(time.perf_counter() - t0)
        if check is None:
            check = out
        assert out == check
    return statistics.mean(results), (statistics.pstdev(results) if repeats > 1 else 0.0), check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    if HAVE_NUMBA:
        print("[warmup] compiling jitted kernels...")
        for _, fn in WORKLOADS:
            fn(kn)
    else:
        print("[info] numba unavailable; timing only the pure-Python path")

    header = f"{'workload':22s} {'python(s)':>12s} {'numba(s)':>12s} {'speedup':>9s}"
    print()
    print(header)
    print("-" * len(header))
    for name, fn in WORKLOADS:
        py_mean, py_std, py_out = time_workload(fn, kp, args.repeats)
        if HAVE_NUMBA:
            nb_mean, nb_std, nb_out = time_workload(fn, kn, args.repeats)
            assert py_out == nb_out, f"backend mismatch in {name}"
            print(f"{name:22s} {py_mean:12.4f} {nb_mean:12.4f} {py_mean / nb_mean:8.1f}x")
        else:
            print(f"{name:22s} {py_mean:12.4f} {'-':>12s} {'-':>9s}")
    print()
    print(f"repeats={args.repeats}; identical outputs asserted per workload")


if __name__ == "__main__":
    main()
