"""Time the BFS census for every generating set up to the default caps.

Usage:
    python scripts/census_timing.py [--max-a 9] [--max-s 8]
"""

import argparse
import time

from altgroup.oracle import bfs_census
from altgroup.tables import a_table, genfunc_rr


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-a", type=int, default=9)
    ap.add_argument("--max-s", type=int, default=8)
    args = ap.parse_args()

    a = a_table(args.max_a)
    print("group,n,set,order,diameter,seconds,matches_formula")
    for n in range(3, args.max_a + 1):
        for kind in ("a-transpositions", "mitsuhashi"):
            t0 = time.perf_counter()
            c = bfs_census("A", n, kind)
            dt = time.perf_counter() - t0
            want = a.row(n)[:n - 1] if kind == "a-transpositions" else list(genfunc_rr(n).coefficients)
            print(f"A,{n},{kind},{c.order},{c.max_distance},{dt:.3f},{list(c.histogram) == want}")
    for n in range(2, args.max_s + 1):
        for kind in ("coxeter", "transpositions"):
            t0 = time.perf_counter()
            c = bfs_census("S", n, kind)
            dt = time.perf_counter() - t0
            print(f"S,{n},{kind},{c.order},{c.max_distance},{dt:.3f},")


if __name__ == "__main__":
    main()
