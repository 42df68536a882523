"""Mean-square error of the truncated Fourier series of the crossing indicator.

Compares the corrected series with the variant lacking the axis terms and with
the flipped sign on the (n, -(n+m), m) family, on a 17^4 grid of distinct points.
"""

import argparse

import numpy as np

from crossbound.fourier import crossing_indicator, truncated_series_c


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=int, default=17)
    parser.add_argument("--truncations", type=int, nargs="+", default=[25, 50, 100, 200, 400])
    args = parser.parse_args()

    g = np.arange(args.grid) / args.grid
    P = np.stack(np.meshgrid(g, g, g, g, indexing="ij"), -1).reshape(-1, 4)
    P = P[[len(set(p)) == 4 for p in map(tuple, P)]]
    w, x, y, z = P.T
    ind = crossing_indicator(w, x, y, z)
    print(f"{len(P)} points")
    print(f"{'N':>5} {'mse corrected':>14} {'mse as printed':>15}")
    for N in args.truncations:
        good = np.mean((truncated_series_c(w, x, y, z, N) - ind) ** 2)
        bad = np.mean((truncated_series_c(w, x, y, z, N, as_printed=True) - ind) ** 2)
        print(f"{N:>5} {good:>14.3e} {bad:>15.3e}")


if __name__ == "__main__":
    main()
