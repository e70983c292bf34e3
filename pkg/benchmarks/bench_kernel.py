"""Benchmark the compiled propagation kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernel.py [n_steps]
"""

import sys
import time

from spincarnot import _kernel_py

try:
    from spincarnot import _kernel
except ImportError:
    _kernel = None

ARGS = (0, 3.6, 1.44, 0.5, 0.0, 0.4228551381967262, 0.0)


def bench(fn, n_steps, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*ARGS, n_steps)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    n_steps = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    t_py, r_py = bench(_kernel_py.propagate_bloch, n_steps)
    print(f"python kernel: {n_steps} steps in {t_py:.4f}s "
          f"({n_steps / t_py / 1e6:.2f} Msteps/s)")
    if _kernel is None:
        print("compiled kernel: not built")
        return
    t_cy, r_cy = bench(_kernel.propagate_bloch, n_steps)
    print(f"cython kernel: {n_steps} steps in {t_cy:.4f}s "
          f"({n_steps / t_cy / 1e6:.2f} Msteps/s)")
    print(f"speedup: {t_py / t_cy:.1f}x")
    drift = max(abs(a - b) for a, b in zip(r_py, r_cy))
    print(f"max component difference: {drift:.2e}")


if __name__ == "__main__":
    main()
