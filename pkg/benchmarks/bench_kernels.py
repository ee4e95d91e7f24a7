#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Usage:
    python benchmarks/bench_kernels.py [--points 20000] [--boundary 4096] [--repeat 5]

The same benchmark can be forced onto the fallback path alone by setting
CARDIOIDSTAR_NO_NUMBA=1 (the numba column then disappears).
"""

import argparse
import math
import time

import numpy as np

from cardioidstar import kernels
from cardioidstar.geometry import boundary_curve


def time_call(fn, *args, repeat=5):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--points", type=int, default=20000)
    parser.add_argument("--boundary", type=int, default=4096)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    phi = rng.uniform(0.0, math.pi, args.points)
    wre = rng.uniform(-1.0, 5.0, args.points)
    wim = rng.uniform(-4.0, 4.0, args.points)
    bd = boundary_curve(args.boundary)

    impls = kernels.implementations()
    cases = [
        ("psi_invert", lambda impl: impl["psi_invert"](phi)),
        ("clearance", lambda impl: impl["clearance"](wre, wim)),
        ("winding_numbers", lambda impl: impl["winding_numbers"](wre, wim, bd.real, bd.imag)),
    ]

    print(f"points={args.points} boundary={args.boundary} "
          f"active_backend={kernels.ACTIVE_BACKEND}")
    header = f"{'kernel':<18}" + "".join(f"{name:>14}" for name in impls)
    print(header)
    for case_name, runner in cases:
        # warm-up (includes jit compilation on the numba path)
        for impl in impls.values():
            runner(impl)
        row = f"{case_name:<18}"
        times = {}
        for name, impl in impls.items():
            times[name] = time_call(lambda: runner(impl), repeat=args.repeat)
            row += f"{times[name] * 1e3:>12.2f}ms"
        if "numba" in times and "numpy" in times and times["numba"] > 0:
            row += f"   x{times['numpy'] / times['numba']:.1f}"
        print(row)

    # cross-backend agreement, so the benchmark doubles as a parity check
    if len(impls) == 2:
        a = impls["numpy"]["clearance"](wre, wim)
        b = impls["numba"]["clearance"](wre, wim)
        print(f"max |numpy - numba| clearance gap: {np.abs(a - b).max():.3e}")


if __name__ == "__main__":
    main()
