"""Time the compiled grid kernels against their pure-Python twins.

    python benchmarks/bench_kernels.py --grid 100000 --repeat 3
"""

import argparse
import sys
import time

from skinning_bounds._kernels import _pykernels
from skinning_bounds.constants import universal_constants

try:
    from skinning_bounds._kernels import _ckernels
except ImportError:
    _ckernels = None


def cases(grid: int):
    k = universal_constants()
    side = max(10, int(grid ** 0.5))
    return [
        ("argmax_geometric_grid", (1e-3, 20.0, grid)),
        ("scan_min_ratio", (grid, 1e-8, 50.0)),
        ("scan_sinh_linear", (grid, k.c2, k.c3, 1e-6)),
        ("scan_collar_monotone", (grid, 2.0 * k.eps0)),
        ("scan_inj_floor", (grid, k.c1, k.c2, 1000.0)),
        ("collar_identity_residual", (side, side, 2.0 * k.eps0)),
    ]


def best_time(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--grid", type=int, default=100_000, help="points per scan")
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`",
              file=sys.stderr)
        return 1

    print(f"{'kernel':28} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for name, fargs in cases(args.grid):
        tp = best_time(getattr(_pykernels, name), fargs, args.repeat)
        tc = best_time(getattr(_ckernels, name), fargs, args.repeat)
        print(f"{name:28} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
