"""Scan Riordan pairs (d, h) over small polynomial families and tabulate the
largest SDR order verified on a window.  Exploration data only."""

import argparse
import itertools

from sdrmatrix.riordan import RiordanPair, Series, riordan_window
from sdrmatrix.sdr import max_order


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rows", type=int, default=10)
    ap.add_argument("--cap", type=int, default=6)
    ap.add_argument("--coeffs", type=int, nargs="+", default=[-1, 0, 1, 2])
    args = ap.parse_args()
    N = args.rows
    d = Series.poly([1, 1], N)
    print(f"d = 1 + t, h = t + x t^2 + y t^3, {N} rows")
    for x, y in itertools.product(args.coeffs, repeat=2):
        h = Series.poly([0, 1, x, y], N)
        m, _ = max_order(riordan_window(RiordanPair(d, h), N), args.cap)
        print(f"  x={x:2d} y={y:2d}  order {m}")


if __name__ == "__main__":
    main()
