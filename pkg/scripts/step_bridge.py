"""Integral of C(w,x,y,z) f(w,x) f(y,z) for the step function of the cylindrical drawing.

Prints, per n, 8 n^-4 (uncut - cut) next to the exact integral split into its
distinct-cell and coincident-cell parts, and the truncated-series and
quadrature approximations.
"""

import argparse

from crossbound.drawing import build_cylindrical
from crossbound.fourier import (
    cell_sum_identity,
    lhs_form,
    quadrature_integral,
    step_function_integral,
    step_function_table,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=5)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--truncation", type=int, default=6)
    parser.add_argument("--grid", type=int, default=48)
    args = parser.parse_args()

    print(f"{'n':>3} {'8(u-c)/n^4':>11} {'distinct':>10} {'coincident':>11} "
          f"{'series':>10} {'quadrature':>11} {'discrepancy':>12}")
    for n in range(args.n_min, args.n_max + 1):
        d = build_cylindrical(n)
        target = cell_sum_identity(d)
        distinct, coincident = step_function_integral(d)
        table = step_function_table(d, args.truncation)
        series, quad = lhs_form(table), quadrature_integral(table, args.grid)
        disc = max(abs(series - target), abs(quad - target))
        print(f"{n:>3} {target:>11.5f} {distinct:>10.5f} {coincident:>11.5f} "
              f"{series:>10.5f} {quad:>11.5f} {disc:>12.5f}")


if __name__ == "__main__":
    main()
