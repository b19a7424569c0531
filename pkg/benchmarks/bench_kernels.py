"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is run on both backends; outputs are compared before timing.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from pointfree import _pykernels

try:
    from pointfree import _ckernels
except ImportError:
    _ckernels = None


def workloads(rng: random.Random):
    n = 10
    size = 1 << n
    seed = [rng.randrange(size) if rng.random() < 0.05 else 0 for _ in range(size)]
    keys = [1 << i for i in range(n)]
    vals = [rng.randrange(size) for _ in range(n)]
    perm = list(range(size))
    rng.shuffle(perm)
    box = list(range(size))  # identity passes both checks, so the full scan runs
    return {
        "or_zeta(10 bits)": ("or_zeta", (seed, n)),
        "join_below(10 bits)": ("join_below", (n, keys, vals)),
        "compose_tables(1024)": ("compose_tables", (perm, perm)),
        "meet_failure(256)": ("meet_failure", (box[:256],)),
        "join_failure(256)": ("join_failure", (box[:256],)),
        "closed_families(3)": ("closed_families", (3,)),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return 1
    rng = random.Random(0)
    print(f"{'kernel':<24}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for label, (name, call_args) in workloads(rng).items():
        py, cy = getattr(_pykernels, name), getattr(_ckernels, name)
        if list(py(*call_args)) != list(cy(*call_args)):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        t_py = min(timeit.repeat(lambda: py(*call_args), number=args.number, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: cy(*call_args), number=args.number, repeat=args.repeat))
        per_py, per_cy = 1e3 * t_py / args.number, 1e3 * t_cy / args.number
        print(f"{label:<24}{per_py:>14.3f}{per_cy:>14.3f}{per_py / per_cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
