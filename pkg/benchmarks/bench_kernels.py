#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Run from the repository root after installing the package:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from benfordlab import _kernels_numpy

try:
    from benfordlab import _kernels as compiled
except ImportError:
    compiled = None


def _time(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = np.random.default_rng(0)
    workloads = []

    u = rng.random(10_000)
    hs = np.arange(1, 201, dtype=float)
    workloads.append(("weyl_sums N=1e4 H=200", "weyl_sums", (u, hs)))

    workloads.append(("partial_log_exp k=5e5 h=7", "partial_log_exp_moduli", (500_000, 7.0)))

    pts = np.sort(rng.random(1500))
    vals, counts = np.unique(pts, return_counts=True)
    workloads.append(
        ("extreme_oracle N=1500", "extreme_oracle", (vals, counts.astype(float), pts.size))
    )

    print(f"{'workload':34s} {'numpy':>10s} {'compiled':>10s} {'speedup':>8s}")
    for label, name, args in workloads:
        t_np = _time(getattr(_kernels_numpy, name), *args)
        if compiled is None:
            print(f"{label:34s} {t_np*1e3:9.2f}ms {'n/a':>10s}")
            continue
        t_c = _time(getattr(compiled, name), *args)
        ref = np.asarray(getattr(_kernels_numpy, name)(*args))
        got = np.asarray(getattr(compiled, name)(*args))
        assert np.allclose(ref, got, atol=1e-10), f"backend mismatch on {name}"
        print(f"{label:34s} {t_np*1e3:9.2f}ms {t_c*1e3:9.2f}ms {t_np/t_c:7.1f}x")


if __name__ == "__main__":
    main()
