"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times lattice-point counting, enumeration and the lower-hull cell search on
fixed inputs, checks that both backends return identical results, and
prints one row per workload.
"""

from __future__ import annotations

import argparse
import sys
import time

from alcoved import _backend, _kernels_py
from alcoved.enumeration import lattice_points
from alcoved.lattice_core import dilate, shortest_path_closure
from alcoved.polytopes import derive_seed, make_qd, random_alcoved
from alcoved.triangulation import lift_height


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def workloads():
    for d, t in [(3, 40), (4, 12), (5, 6)]:
        P = random_alcoved(d, derive_seed(1, 0))
        D = shortest_path_closure(dilate(P.hrep, t))
        yield f"count d={d} t={t}", "count_points", (D, 10**9)
    for d in (3, 4):
        D = shortest_path_closure(dilate(random_alcoved(d, derive_seed(1, 1)).hrep, 4))
        yield f"enumerate d={d} t=4", "enumerate_points", (D, 10**7)
    for name, P in [("Q_3", make_qd(3)), ("Q_4", make_qd(4)), ("random d=3", random_alcoved(3, derive_seed(1, 43)))]:
        ps = lattice_points(P)
        A = list(ps.points)
        heights = [[0 if m else 1 for m in ps.interior_mask], [lift_height(p) for p in A]]
        yield f"cells {name} ({len(A)} pts)", "regular_cells", (A, heights, P.dim)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not _backend.compiled_available():
        print("compiled extension not available; nothing to compare", file=sys.stderr)
        return 1
    from alcoved import _kernels

    print(f"{'workload':32} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for label, fn, fargs in workloads():
        tp, rp = _best(lambda: getattr(_kernels_py, fn)(*fargs), args.repeat)
        tc, rc = _best(lambda: getattr(_kernels, fn)(*fargs), args.repeat)
        if rp != rc:
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        print(f"{label:32} {tp:11.4f} {tc:11.4f} {tp / max(tc, 1e-9):7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
