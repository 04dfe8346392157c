"""Count the bound cells that none of the sufficient conditions pins down.

For n = 0 mod 4 and even b >= 2 the double-column entries are only bounded
in general. This tallies, per n, how many cells stay at '<=v', and which of
the three conditions resolves the others.
"""

import argparse
from collections import Counter

from spindec import decomp as D
from spindec import partitions as P


def scan(n):
    tally = Counter()
    small, bar = P.bounds(n)[1:]
    for b in range(2, bar + 1, 2):
        if not D.double_column_ok(n, b):
            continue
        for a in range(b, small + 1):
            r = D.resolve_bound(n, a, b)
            if r.bound == 0 or r.residue_two:
                tally["zero"] += 1
            elif r.valuation:
                tally["valuation"] += 1
            elif r.vanishing:
                tally["vanishing"] += 1
            elif r.c_equation:
                tally["c-equation"] += 1
            else:
                tally["open"] += 1
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=80)
    args = ap.parse_args()

    keys = ["zero", "valuation", "vanishing", "c-equation", "open"]
    print("n    " + " ".join(f"{k:>10s}" for k in keys))
    total = Counter()
    for n in range(8, args.max_n + 1, 4):
        t = scan(n)
        total += t
        print(f"{n:<4d} " + " ".join(f"{t[k]:>10d}" for k in keys))
    print("all  " + " ".join(f"{total[k]:>10d}" for k in keys))


if __name__ == "__main__":
    main()
