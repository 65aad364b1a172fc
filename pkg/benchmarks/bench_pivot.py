"""Time the exact simplex with the compiled and the pure-Python pivot kernel.

Workload: the h-diagram LP for every integer vector with entries 0..E and
degree <= D, for n = 1..N (the oracle half of the verdict-equivalence sweep).

    python benchmarks/bench_pivot.py [--n-max 3] [--d-max 5] [--entry-max 3] [--repeat 1]
"""

import argparse
import itertools
import sys
import time

from hcone._kernels import pivot_py
from hcone.core import HVector
from hcone.oracle import membership_oracle

simplex = sys.modules["hcone.oracle.simplex"]


def workload(n_max, d_max, entry_max):
    return [
        (n, HVector(vals))
        for n in range(1, n_max + 1)
        for vals in itertools.product(range(entry_max + 1), repeat=d_max + 1)
    ]


def run(cases, kernel):
    simplex.kernel_pivot = kernel
    start = time.perf_counter()
    verdicts = [membership_oracle(n, h).member for n, h in cases]
    return time.perf_counter() - start, verdicts


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--d-max", type=int, default=5)
    ap.add_argument("--entry-max", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args(argv)
    try:
        from hcone._kernels import pivot_ext
    except ImportError:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
        return 1
    cases = workload(args.n_max, args.d_max, args.entry_max)
    original = simplex.kernel_pivot
    try:
        results = {}
        for name, kernel in (("python", pivot_py.pivot), ("cython", pivot_ext.pivot)):
            times = []
            for _ in range(args.repeat):
                t, verdicts = run(cases, kernel)
                times.append(t)
            results[name] = (min(times), verdicts)
    finally:
        simplex.kernel_pivot = original
    if results["python"][1] != results["cython"][1]:
        print("MISMATCH: kernels disagree")
        return 1
    py, cy = results["python"][0], results["cython"][0]
    print(f"{len(cases)} membership LPs (n<={args.n_max}, d<={args.d_max}, entries<={args.entry_max})")
    print(f"python kernel: {py:8.2f} s")
    print(f"cython kernel: {cy:8.2f} s")
    print(f"speedup:       {py / cy:8.2f}x  (verdicts identical)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
