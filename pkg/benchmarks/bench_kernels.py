#!/usr/bin/env python3
"""Time the numba kernels against their pure-numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 5]

The first numba call per kernel includes JIT compilation (or a cache load)
and is reported separately as warm-up.
"""
import argparse
import time

import numpy as np

from coprime_rns import kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    moduli = np.array([2**32 - 5, 2**32 - 17, 65521, 251, 241, 239, 233, 229], dtype=np.uint64)
    values = rng.integers(0, 2**63, size=200_000, dtype=np.uint64)
    a = kernels.residues(values, moduli, backend="numpy")
    b = kernels.residues(values[::-1].copy(), moduli, backend="numpy")
    rows = kernels.factor_table(2, 2000, backend="numpy")
    return {
        "factor_table [2, 200000]": lambda be: kernels.factor_table(2, 200_000, backend=be),
        "factor_table [2^32-20000, 2^32-1]": lambda be: kernels.factor_table(2**32 - 20_000, 2**32 - 1, backend=be),
        "residues 200000 x 8": lambda be: kernels.residues(values, moduli, backend=be),
        "channel mul 200000 x 8": lambda be: kernels.channel(a, b, moduli, "mul", backend=be),
        "channel sub 200000 x 8": lambda be: kernels.channel(a, b, moduli, "sub", backend=be),
        "coprime_matrix 1999 x 1999": lambda be: kernels.coprime_matrix(rows, rows, backend=be),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"{'kernel':<36}{'warm-up':>10}{'numba':>10}{'numpy':>10}{'speedup':>9}")
    for name, fn in cases().items():
        t0 = time.perf_counter()
        ref = fn("numba")
        warm = time.perf_counter() - t0
        assert np.array_equal(ref, fn("numpy")), name
        t_nb = best_of(lambda: fn("numba"), args.repeat)
        t_np = best_of(lambda: fn("numpy"), args.repeat)
        print(f"{name:<36}{warm:>9.3f}s{t_nb:>9.4f}s{t_np:>9.4f}s{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
