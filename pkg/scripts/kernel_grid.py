"""Kernel distinctness over a (k1, k2) grid, both by self-pairing and by lines.

Also tabulates f(k) = (2k+1)/(3k^2+3k+1) and the quadratic coefficient
3k^2/(3k^2+3k+1) of w_0 - w_k, which increases to 1.
"""

import argparse
import time

from lkobstruct.alexander import f_monotone, f_value, kernels_distinct


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=100)
    ap.add_argument("--show", type=int, default=8, help="rows of the w_0 - w_k table")
    args = ap.parse_args()

    t0 = time.perf_counter()
    bad = []
    for k1 in range(args.kmax + 1):
        for k2 in range(args.kmax + 1):
            c = kernels_distinct(k1, k2)
            if not (c.pairing_distinct == c.line_distinct == (k1 != k2)):
                bad.append((k1, k2))
    dt = time.perf_counter() - t0
    n = (args.kmax + 1) ** 2
    print(f"{n} pairs checked in {dt:.2f}s, {len(bad)} disagreements")

    print(f"\n{'k':>4} {'f(k)':>12} {'w_0 - w_k':>28} {'c^2+cd+d^2':>14}")
    for k in range(1, args.show + 1):
        c = kernels_distinct(0, k)
        print(f"{k:>4} {str(f_value(k)):>12} {str(c.difference):>28} {str(c.quadratic):>14}")
    print(f"\nf strictly decreasing up to 10^4: {f_monotone(10_000)}")


if __name__ == "__main__":
    main()
