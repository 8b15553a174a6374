"""Compare the compiled and numpy commutator-histogram kernels.

    python benchmarks/bench_kernels.py [--q 7 13 17] [--repeat 3]

Both backends are timed on the same SL(2, F_q) tables and their histograms
compared for equality.  Without the compiled extension only the numpy
column is filled.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from epoly.oracle import _kernels_py
from epoly.oracle.groups import sl2_table, symmetric_group

try:
    from epoly.oracle import _kernels
except ImportError:
    _kernels = None


def _best(fn, args, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[7, 11, 13, 17])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    cases = []
    for q in args.q:
        G = sl2_table(q)
        F = G.sl2["field"]
        cases.append((f"SL(2,{q}) |G|={G.order}", "commutator_hist_sl2",
                      (G.sl2["elems"], F.add, F.mul, F.neg, G.sl2["lookup"], q)))
    S5 = symmetric_group(5)
    cases.append((f"S5 |G|={S5.order}", "commutator_hist_cayley", (S5.table, S5.inv)))

    print(f"{'group':<22}{'cython s':>11}{'numpy s':>11}{'speedup':>9}  agree")
    for label, name, fargs in cases:
        t_np, h_np = _best(getattr(_kernels_py, name), fargs, args.repeat)
        if _kernels is None:
            print(f"{label:<22}{'-':>11}{t_np:>11.4f}{'-':>9}  -")
            continue
        t_cy, h_cy = _best(getattr(_kernels, name), fargs, args.repeat)
        agree = np.array_equal(np.asarray(h_cy), np.asarray(h_np))
        print(f"{label:<22}{t_cy:>11.4f}{t_np:>11.4f}{t_np / t_cy:>8.1f}x  {agree}")


if __name__ == "__main__":
    main()
