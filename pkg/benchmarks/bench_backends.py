#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Runs the four hot entry points on both backends and prints per-call times
and the speedup. Since the backends are bit-identical, this table is the
entire trade-off between them.

Usage:
    python benchmarks/bench_backends.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import timeit

from dronetco import CostParams
from dronetco import _kernels_py

try:
    from dronetco import _kernels as _kernels_cy
except ImportError:
    _kernels_cy = None

PACKED = CostParams().pack()

CASES = {
    "objective(7.3, 2.1, h=5)":
        lambda k: k.objective(7.3, 2.1, PACKED, 5.0),
    "gradient(7.3, 2.1, h=5)":
        lambda k: k.gradient(7.3, 2.1, PACKED, 5.0),
    "components(7.3, 2.1)":
        lambda k: k.components(7.3, 2.1, PACKED),
    "descend from (1,1), box 30x10":
        lambda k: k.descend(1.0, 1.0, PACKED, 1.0, 0.1, 1e-3, 10_000, 30.0, 10.0),
    "grid_scan 30x10":
        lambda k: k.grid_scan(PACKED, 1.0, 1, 30, 1, 10),
}

# per-timing loop counts, tuned so each row takes ~0.1 s on the slow backend
LOOPS = {
    "objective(7.3, 2.1, h=5)": 20_000,
    "gradient(7.3, 2.1, h=5)": 10_000,
    "components(7.3, 2.1)": 20_000,
    "descend from (1,1), box 30x10": 50,
    "grid_scan 30x10": 200,
}


def best_time(fn, loops: int, repeat: int) -> float:
    """Best per-call seconds over ``repeat`` timing runs."""
    timer = timeit.Timer(fn)
    return min(timer.repeat(repeat=repeat, number=loops)) / loops


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions per case (default 5)")
    args = parser.parse_args()

    if _kernels_cy is None:
        print("compiled extension not built; only timing the pure-Python "
              "backend\n")

    width = max(len(name) for name in CASES)
    header = f"{'case':<{width}}  {'python':>12}"
    if _kernels_cy is not None:
        header += f"  {'cython':>12}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, call in CASES.items():
        loops = LOOPS[name]
        t_py = best_time(lambda: call(_kernels_py), loops, args.repeat)
        line = f"{name:<{width}}  {t_py * 1e6:>10.2f}us"
        if _kernels_cy is not None:
            t_cy = best_time(lambda: call(_kernels_cy), loops, args.repeat)
            line += f"  {t_cy * 1e6:>10.2f}us  {t_py / t_cy:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
