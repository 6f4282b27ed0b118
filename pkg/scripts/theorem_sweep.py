"""Evaluate every catalogued theorem on every small space and tally the verdicts."""
import argparse
import json
from collections import Counter

from fuzzytop.lab.enumeration import enumerate_topologies, small_carrier
from fuzzytop.lattice import Grid
from fuzzytop.theorems import COUNTEREXAMPLE, THEOREM_IDS, check_theorem


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-points", type=int, default=3)
    ap.add_argument("--grid", type=int, default=1, help="grid denominator (1 = crisp)")
    ap.add_argument("--family-size", type=int, default=3)
    ap.add_argument("--show-witness", action="store_true")
    args = ap.parse_args()

    grid = Grid.crisp() if args.grid == 1 else Grid.uniform(args.grid)
    tally = Counter()
    first = {}
    spaces = 0
    for n in range(1, args.max_points + 1):
        for tau in enumerate_topologies(small_carrier(n), grid):
            spaces += 1
            for tid in THEOREM_IDS:
                v = check_theorem(tau, tid, family_size=args.family_size)
                tally[tid, v.status] += 1
                if v.status == COUNTEREXAMPLE and tid not in first:
                    first[tid] = (tau.describe(), v.witness)
    print(f"{spaces} spaces, family size {args.family_size}")
    for tid in THEOREM_IDS:
        row = ", ".join(f"{s}={tally[tid, s]}" for s in ("holds", "vacuous", "counterexample")
                        if tally[tid, s])
        print(f"{tid:>5}: {row}")
        if args.show_witness and tid in first:
            space, wit = first[tid]
            print(f"       first counterexample on {space}: {json.dumps(wit)}")


if __name__ == "__main__":
    main()
