"""Sweep the triviality obstruction over torus knots and slopes.

Writes one JSON object per line (sorted by p, q, c, d) and prints a
per-(p,q) summary of syllable lengths.

    python3 scripts/run_sweep.py --cmax 20 --parallelism 1 --out sweep.jsonl
"""

import argparse
import json
import sys
import time
from collections import defaultdict

from lkobstruct.obstruction import DEFAULT_PQ, ObstructionInvariantError, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cmax", type=int, default=20)
    ap.add_argument("--pmax", type=int, default=11)
    ap.add_argument("--parallelism", type=int, default=1)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    t0 = time.perf_counter()
    try:
        rows = run_sweep(DEFAULT_PQ, cmax=args.cmax, pmax=args.pmax, parallelism=args.parallelism)
    except ObstructionInvariantError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 1
    dt = time.perf_counter() - t0

    if args.out:
        with open(args.out, "w") as fh:
            for r in rows:
                fh.write(json.dumps(r) + "\n")

    by_pq = defaultdict(list)
    for r in rows:
        by_pq[r["p"], r["q"]].append(r)
    print(f"{'(p,q)':>8} {'slopes':>7} {'max syl':>8} {'all 2|c|':>9} {'cyc red':>8}")
    for (p, q), rs in sorted(by_pq.items()):
        ok = all(r["syllables"] == 2 * abs(r["c"]) for r in rs)
        cr = all(r["cyclically_reduced"] for r in rs)
        print(f"{f'({p},{q})':>8} {len(rs):>7} {max(r['syllables'] for r in rs):>8} {str(ok):>9} {str(cr):>8}")
    print(f"{len(rows)} reports in {dt:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
