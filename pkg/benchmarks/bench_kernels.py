#!/usr/bin/env python3
"""Timing comparison between the compiled digit kernels and the pure-Python
fallback.

Covers the operations that dominate real workloads: residue multiplication
and inversion at several precisions, full coefficient evaluation, and the
exhaustive pairing scan.  The pure lane rides CPython's big-integer core,
so expect it to close the gap as N grows; the compiled lane wins on object
overhead at small and medium precision and by a wide margin on the scan.
"""

import argparse
import random
import time

from tatedual import kernels
from tatedual.padic import padic_from_integer
from tatedual.tate import tate_coefficients


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_mul(p, n, rounds):
    rng = random.Random(1)
    a = tuple(rng.randrange(p) for _ in range(n))
    b = tuple(rng.randrange(p) for _ in range(n))

    def body():
        x = a
        for _ in range(rounds):
            x = kernels.mul(x, b, p)

    return body


def bench_inv(p, n, rounds):
    rng = random.Random(2)
    units = [
        (rng.randrange(1, p),) + tuple(rng.randrange(p) for _ in range(n - 1))
        for _ in range(rounds)
    ]

    def body():
        for u in units:
            kernels.inv(u, p)

    return body


def bench_tate(p, n):
    q = padic_from_integer(p, p, n)

    def body():
        tate_coefficients(q)

    return body


def bench_scan(p, level):
    def body():
        kernels.bilinear_scan(p, level)

    return body


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--prime", type=int, default=3)
    parser.add_argument("--sizes", default="16,64,256",
                        help="comma-separated precisions N")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if "compiled" not in kernels.available_backends():
        print("compiled kernels are not built; nothing to compare")
        return

    p = args.prime
    sizes = [int(s) for s in args.sizes.split(",")]
    cases = []
    for n in sizes:
        cases.append((f"mul      p={p} N={n} x500", bench_mul(p, n, 500)))
        cases.append((f"inv      p={p} N={n} x100", bench_inv(p, n, 100)))
        cases.append((f"tate     p={p} N={n}", bench_tate(p, n)))
    cases.append(("scan     p=5 level=5", bench_scan(5, 5)))
    cases.append(("scan     p=2 level=11", bench_scan(2, 11)))

    header = f"{'case':30} {'pure (ms)':>12} {'compiled (ms)':>14} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, body in cases:
        kernels.set_backend("pure")
        t_pure = time_call(body, args.repeat)
        kernels.set_backend("compiled")
        t_comp = time_call(body, args.repeat)
        kernels.set_backend("auto")
        print(
            f"{label:30} {t_pure * 1e3:12.3f} {t_comp * 1e3:14.3f} "
            f"{t_pure / t_comp:8.1f}x"
        )


if __name__ == "__main__":
    main()
