#!/usr/bin/env python3
"""Compare the numba and pure-numpy kernel variants on representative inputs.

Usage: python3 benchmarks/bench_kernels.py [--n 8] [--repeat 5]
"""

import argparse
import time

import numpy as np

from sidonlab import build_named, random_sidon
from sidonlab._kernels import NUMBA_IMPLS, NUMPY_IMPLS


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    n = args.n

    f = build_named("gold", n, k=1)
    s = random_sidon(2 * n, 0)
    cases = {
        "walsh_table": (f.values, n),
        "solution_table": (f.values, n),
        "ddt_max": (f.values,),
        "pair_xor_counts": (f.values,),
        "dproperty_missing": (f.values, n),
        "triple_mult": (s.points, 2 * n),
        "has_pair_collision": (s.points, 2 * n),
        "ddt_row": (f.values, 1),
        "solution_row": (f.values, 1),
    }
    fwht_input = np.arange(1 << (2 * n), dtype=np.int64)

    if NUMBA_IMPLS is None:
        print("numba unavailable; only the numpy timings are shown")

    header = f"{'kernel':<20} {'numpy':>12} {'numba':>12} {'speedup':>9}"
    print(f"gold function, n={n}; best of {args.repeat} runs, seconds")
    print(header)
    print("-" * len(header))
    for name, case in cases.items():
        t_np = best_of(NUMPY_IMPLS[name], case, args.repeat)
        if NUMBA_IMPLS is None:
            print(f"{name:<20} {t_np:>12.6f} {'-':>12} {'-':>9}")
            continue
        NUMBA_IMPLS[name](*case)  # warm the compile cache
        t_nb = best_of(NUMBA_IMPLS[name], case, args.repeat)
        print(f"{name:<20} {t_np:>12.6f} {t_nb:>12.6f} {t_np / t_nb:>8.1f}x")

    # fwht mutates its input: time fresh copies
    for label, impls in (("numpy", NUMPY_IMPLS), ("numba", NUMBA_IMPLS or {})):
        if not impls:
            continue
        impls["fwht_inplace"](fwht_input.copy())
        t = min(best_of(impls["fwht_inplace"], (fwht_input.copy(),), 1)
                for _ in range(args.repeat))
        print(f"{'fwht_inplace':<20} ({label}) {t:.6f}")


if __name__ == "__main__":
    main()
