#!/usr/bin/env python
"""Compare the compiled kernel against the pure-Python fallback.

Times the exact integer-fraction primitives (polynomial division,
fraction-free row reduction) and one end-to-end decomposition, on the
same inputs for both backends.  Run from a checkout:

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import importlib
import os
import random
import sys
from time import perf_counter


def load_backend(name: str):
    os.environ["MINDEC_KERNEL"] = name
    for mod in [m for m in list(sys.modules) if m.startswith("mindec")]:
        del sys.modules[mod]
    kernel = importlib.import_module("mindec._kernel")
    return kernel


def bench(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = perf_counter()
        fn()
        best = min(best, perf_counter() - t0)
    return best


def poly_inputs(rng):
    a_n = [rng.randint(-50, 50) for _ in range(60)] + [1]
    a_d = [rng.randint(1, 9) for _ in range(61)]
    b_n = [rng.randint(-50, 50) for _ in range(25)] + [1]
    b_d = [rng.randint(1, 9) for _ in range(26)]
    return a_n, a_d, b_n, b_d

def matrix_inputs(rng, n=40):
    nums = [rng.randint(-30, 30) for _ in range(n * n)]
    dens = [rng.randint(1, 7) for _ in range(n * n)]
    return nums, dens, n


def decompose_case():
    from mindec.generator import random_matrix
    from mindec.decompose import sn_decompose

    M = random_matrix("bench", max_size=6).matrix
    return lambda: sn_decompose(M)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random("bench")
    a_n, a_d, b_n, b_d = poly_inputs(rng)
    m_nums, m_dens, m_size = matrix_inputs(rng)

    rows = []
    for name, label in (("py", "python"), ("c", "c")):
        try:
            kernel = load_backend(name)
        except ImportError:
            print(f"backend {name!r} unavailable; skipping")
            continue
        if kernel.BACKEND != label:
            print(f"backend {name!r} resolved to {kernel.BACKEND!r}; skipping")
            continue
        t_div = bench(lambda: kernel.poly_divmod(a_n, a_d, b_n, b_d), args.repeat)
        t_red = bench(
            lambda: kernel.rref(m_nums, m_dens, m_size, m_size), args.repeat
        )
        t_sn = bench(decompose_case(), args.repeat)
        rows.append((name, t_div, t_red, t_sn))

    print(f"{'backend':<8} {'poly_divmod':>12} {'rref':>12} {'sn_decompose':>13}")
    for name, t_div, t_red, t_sn in rows:
        print(f"{name:<8} {t_div * 1e3:>10.2f}ms {t_red * 1e3:>10.2f}ms {t_sn * 1e3:>11.2f}ms")
    if len(rows) == 2:
        speedups = [rows[0][i] / rows[1][i] for i in (1, 2, 3)]
        print(
            f"{'speedup':<8} {speedups[0]:>11.2f}x {speedups[1]:>11.2f}x {speedups[2]:>12.2f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
