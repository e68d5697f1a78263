"""Compare the compiled and pure-Python oracle kernels.

    python3 benchmarks/bench_kernels.py [--lmax 12] [--repeat 3]

Times closed-walk counting on real geodesic edge graphs and F_p rank on the
small matrices that building construction produces. Both backends must give
identical results; the script exits non-zero otherwise.
"""

import argparse
import random
import sys
import time

from edgezeta import _kernels_py, kernels
from edgezeta.oracle import build_x2

try:
    from edgezeta import _kernels as compiled
except ImportError:
    compiled = None


def best_of(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lmax", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled extension not available; build it with pip install -e .")
        return 1

    ok = True
    print(f"{'workload':<34}{'python s':>10}{'compiled s':>12}{'speedup':>9}")
    for fam, n, q in [("A", 4, 2), ("A", 4, 3), ("C", 3, 2)]:
        sk = build_x2(fam, n, q)
        size = len(sk.x2_vertices)
        args_ = (sk.x2_indptr, sk.x2_indices, size, args.lmax)
        tp, rp = best_of(lambda: kernels.closed_walk_traces(*args_, impl=_kernels_py), args.repeat)
        tc, rc = best_of(lambda: kernels.closed_walk_traces(*args_, impl=compiled), args.repeat)
        ok &= rp == rc
        label = f"walks {fam}{n}/F{q} ({size} verts)"
        print(f"{label:<34}{tp:>10.3f}{tc:>12.4f}{tp / tc:>8.0f}x")

    rng = random.Random(0)
    mats = []
    for _ in range(20000):
        rows, cols, p = rng.randint(2, 4), 6, rng.choice([2, 3])
        mats.append(([rng.randrange(p) for _ in range(rows * cols)], rows, cols, p))
    tp, rp = best_of(lambda: [kernels.rank_mod_p(*m, impl=_kernels_py) for m in mats], args.repeat)
    tc, rc = best_of(lambda: [kernels.rank_mod_p(*m, impl=compiled) for m in mats], args.repeat)
    ok &= rp == rc
    print(f"{'rank 20000 small F_p matrices':<34}{tp:>10.3f}{tc:>12.4f}{tp / tc:>8.0f}x")
    print("results identical" if ok else "RESULTS DIFFER")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
