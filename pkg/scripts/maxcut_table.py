"""MAX-CUT of G_n, the implied crossing lower bound, and Z(n), for a range of n.

Exact up to the solver's size limit, heuristic after that (marked with *).
"""

import argparse
import math
import time

from crossbound.combinatorics import guy_number
from crossbound.crossing_graph import (
    ExactTooLarge,
    asymptotic_lower_bound,
    build_crossing_graph,
    crossing_lower_bound,
    exact_max_cut,
    heuristic_max_cut,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=14)
    parser.add_argument("--restarts", type=int, default=32)
    args = parser.parse_args()

    print(f"{'n':>3} {'C(n,4)':>7} {'maxcut':>7} {'bound':>6} {'Z(n)':>6} {'lead':>8} {'sec':>6}")
    for n in range(args.n_min, args.n_max + 1):
        g = build_crossing_graph(n)
        start = time.perf_counter()
        try:
            result = exact_max_cut(g)
        except ExactTooLarge:
            result = heuristic_max_cut(g, restarts=args.restarts)
        elapsed = time.perf_counter() - start
        mark = "" if result.certificate else "*"
        print(f"{n:>3} {math.comb(n, 4):>7} {result.value:>6}{mark:1} "
              f"{crossing_lower_bound(n, result.value):>6} {guy_number(n):>6} "
              f"{asymptotic_lower_bound(n):>8.2f} {elapsed:>6.2f}")


if __name__ == "__main__":
    main()
