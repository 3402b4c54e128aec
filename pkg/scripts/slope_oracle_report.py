"""Compare the closed-form epsilon signs with the grid walk over a slope range.

Prints a count of full and multiset agreements, any mismatches, and the three
readings of omega for 10/7 (closed form, grid walk, printed word).
"""

import argparse
from math import gcd

from lkobstruct.slopes import SlopeParam, discrepancy_10_7, epsilon_sequence, format_signs, grid_walk_oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cmax", type=int, default=40)
    ap.add_argument("--dmax", type=int, default=99)
    ap.add_argument("--negative", action="store_true", help="also walk the mirrored arcs")
    args = ap.parse_args()

    total = full = multi = 0
    mismatches = []
    for c in range(2, args.cmax + 1, 2):
        for sign in ((1, -1) if args.negative else (1,)):
            for d in range(1, args.dmax + 1):
                if gcd(c, d) != 1:
                    continue
                s = SlopeParam(sign * c, d)
                a, b = epsilon_sequence(s), grid_walk_oracle(s)
                total += 1
                full += a == b
                multi += sorted(a) == sorted(b)
                if a != b:
                    mismatches.append((str(s), format_signs(a), format_signs(b)))
    print(f"slopes: {total}  full agreement: {full}  multiset agreement: {multi}")
    for m in mismatches[:20]:
        print("  mismatch", *m)

    info = discrepancy_10_7()
    print("\nomega_10/7")
    print(f"  closed form : {info['formula']}   {info['formula_word']}")
    print(f"  grid walk   : {info['oracle']}")
    print(f"  printed     : {info['printed']}   {info['printed_word']}")
    print(f"  differ at {info['differing_positions']}; grid walk supports the {info['oracle_supports']}")


if __name__ == "__main__":
    main()
