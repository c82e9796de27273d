"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

from lspace_obstruct import kernels
from lspace_obstruct.numtheory import is_squarefree, largest_squarefree_in
from lspace_obstruct.obstruction import (
    certify_nonfillable_interval,
    check_slope,
    lemma_interval_bound,
    pretzel_torsion,
)


def squarefree_sweep(limit):
    return sum(is_squarefree(n) for n in range(1, limit + 1))


def lemma_window_hits(m_max):
    return sum(largest_squarefree_in(lemma_interval_bound(m).slopes) is not None for m in range(3, m_max + 1))


def lemma_slopes(m_max):
    count = 0
    for m in range(3, m_max + 1):
        t = pretzel_torsion(m)
        for k in lemma_interval_bound(m).ks:
            count += not check_slope(t, 2 * m + k).inequality_holds
    return count


def wide_scans(m_max):
    return sum(certify_nonfillable_interval(m).certified_s for m in range(3, m_max + 1))


def big_slope(n):
    return kernels.max_scaled_d(pretzel_torsion(50).values, n)


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()
    scale = 10 if args.quick else 1

    cases = [
        (f"is_squarefree 1..{10**6 // scale}", squarefree_sweep, 10**6 // scale),
        (f"lemma windows m<={10**5 // scale}", lemma_window_hits, 10**5 // scale),
        ("lemma slopes m<=100", lemma_slopes, 100),
        (f"default scans m<={300 // scale}", wide_scans, 300 // scale),
        ("d-table max, n=2*10^6", big_slope, 2 * 10**6 // scale),
    ]
    backends = kernels.available_backends()
    print(f"{'case':34}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    original = kernels.BACKEND
    try:
        for name, fn, arg in cases:
            times, results = [], []
            for b in backends:
                kernels.set_backend(b)
                start = time.perf_counter()
                results.append(fn(arg))
                times.append(time.perf_counter() - start)
            assert all(r == results[0] for r in results), f"backends disagree on {name}"
            row = f"{name:34}" + "".join(f"{t:11.3f}s" for t in times)
            if len(times) > 1:
                row += f"{times[1] / times[0]:11.1f}x"
            print(row)
    finally:
        kernels.set_backend(original)


if __name__ == "__main__":
    main()
