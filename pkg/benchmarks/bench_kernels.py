"""Compare the compiled LR kernel with the pure-Python one.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is run on both kernels; the results are checked to agree
before timings are reported.
"""

import argparse
import time

from klm import _lrpy
from klm.partition import partitions

try:
    from klm import _lrkernel
except ImportError:
    _lrkernel = None


def products(limit):
    small = [p for n in range(1, limit + 1) for p in partitions(n)]
    return [("mult", mu, nu) for mu in small for nu in small if sum(mu) + sum(nu) <= limit]


WORKLOADS = {
    "all products, total size <= 9": products(9),
    "(5,3,2,1,1) x (4,3,2,1)": [("mult", (5, 3, 2, 1, 1), (4, 3, 2, 1))],
    "(6,4,3,2,1) x (5,3,2,1)": [("mult", (6, 4, 3, 2, 1), (5, 3, 2, 1))],
    "skew (7,5,5,5)/(3,3,3)": [("skew", (7, 5, 5, 5), (3, 3, 3))],
    "skew (9,7,7,7,7)/(5,5,5,5)": [("skew", (9, 7, 7, 7, 7), (5, 5, 5, 5))],
}


def run(kernel, jobs):
    out = []
    for kind, a, b in jobs:
        out.append(kernel.lr_mult(a, b) if kind == "mult" else kernel.lr_skew(a, b))
    return out


def best_of(kernel, jobs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = run(kernel, jobs)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _lrkernel is None:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'workload':34} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, jobs in WORKLOADS.items():
        tp, rp = best_of(_lrpy, jobs, args.repeat)
        if _lrkernel is None:
            print(f"{name:34} {tp:10.4f}")
            continue
        tc, rc = best_of(_lrkernel, jobs, args.repeat)
        if rp != rc:
            raise SystemExit(f"kernels disagree on {name}")
        print(f"{name:34} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
