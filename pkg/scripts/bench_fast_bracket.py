"""Time the sweep evaluator against the state sum on twist chains of growing length.

The chain ``(s1^3 s2^-3)^k`` has 6k crossings and is a knot unless 3 divides k; the naive sum is only run while it stays
under the configured crossing limit.
"""

import argparse
import time

from knotforge.bracket import bracket_fast, bracket_naive
from knotforge.config import Settings
from knotforge.construct import braid_closure
from knotforge.polynomial import degrees


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=8)
    ap.add_argument("--naive-max", type=int, default=min(Settings.from_env().naive_limit, 18))
    args = ap.parse_args()
    print(f"{'n':>4} {'fast s':>9} {'naive s':>9} {'span':>5} {'4n':>5}")
    for k in range(1, args.max_k + 1):
        if k % 3 == 0:
            continue  # three-component link
        d = braid_closure(([1] * 3 + [-2] * 3) * k)
        t0 = time.perf_counter()
        p = bracket_fast(d)
        tf = time.perf_counter() - t0
        tn = "-"
        if d.n <= args.naive_max:
            t0 = time.perf_counter()
            assert bracket_naive(d, limit=args.naive_max) == p
            tn = f"{time.perf_counter() - t0:9.3f}"
        print(f"{d.n:4d} {tf:9.3f} {tn:>9} {degrees(p)[2]:5d} {4 * d.n:5d}")


if __name__ == "__main__":
    main()
