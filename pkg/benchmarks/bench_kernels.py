#!/usr/bin/env python3
"""Benchmark: compiled vs pure GF(p)[i] elimination kernel.

Times both backends on dense random matrices and on an end-to-end
profile of a dense-ish random 10-qubit state, printing a speedup table.
Run from the repo root:

    python benchmarks/bench_kernels.py
"""

import random
import time

import numpy as np

from multirank import PRIMES_3_MOD_4, build_state, multirank_profile
from multirank.kernels import compiled_rank_mod_gaussian, pure_rank_mod_gaussian

P = PRIMES_3_MOD_4[0]


def rand_arrays(rng, size):
    re = np.array(
        [[rng.randrange(P) for _ in range(size)] for _ in range(size)], dtype=np.int64
    )
    im = np.array(
        [[rng.randrange(P) for _ in range(size)] for _ in range(size)], dtype=np.int64
    )
    return re, im


def best_of(kernel, re, im, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = kernel(re.copy(), im.copy(), P)
        best = min(best, time.perf_counter() - t0)
    return result, best


def bench_kernels():
    rng = random.Random(1)
    print(f"{'size':>6} {'pure (ms)':>12} {'compiled (ms)':>14} {'speedup':>9}")
    for size in (16, 32, 64, 128, 256):
        re, im = rand_arrays(rng, size)
        rank_pure, t_pure = best_of(pure_rank_mod_gaussian, re, im)
        if compiled_rank_mod_gaussian is None:
            print(f"{size:>6} {t_pure * 1e3:>12.3f} {'n/a':>14} {'n/a':>9}")
            continue
        rank_fast, t_fast = best_of(compiled_rank_mod_gaussian, re, im)
        assert rank_pure == rank_fast
        print(
            f"{size:>6} {t_pure * 1e3:>12.3f} {t_fast * 1e3:>14.3f} "
            f"{t_pure / t_fast:>8.1f}x"
        )


def bench_profile():
    rng = random.Random(2)
    n = 10
    dims = (2,) * n
    indices = set()
    while len(indices) < 60:
        indices.add(tuple(rng.randrange(2) for _ in range(n)))
    state = build_state(
        dims, [(idx, (rng.randint(-3, 3), rng.randint(1, 3))) for idx in indices]
    )
    t0 = time.perf_counter()
    profile = multirank_profile(state)
    elapsed = time.perf_counter() - t0
    total = sum(len(level) for level in profile.levels)
    print(
        f"\nend-to-end: 10-qubit state, 60 terms, {total} flattenings "
        f"under the default policy: {elapsed * 1e3:.1f} ms"
    )


if __name__ == "__main__":
    backend = "compiled" if compiled_rank_mod_gaussian is not None else "pure only"
    print(f"kernel backends available: pure python{', compiled' if compiled_rank_mod_gaussian else ''}")
    print(f"modulus p = {P}\n")
    bench_kernels()
    bench_profile()
