"""Count grid-valued Chang topologies on small carriers, labelled and up to isomorphism."""
import argparse
import time

from fuzzytop.lab.enumeration import count_topologies, small_carrier
from fuzzytop.lattice import Grid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-points", type=int, default=4)
    ap.add_argument("--grids", type=int, nargs="+", default=[1, 2],
                    help="grid denominators; 1 is the crisp grid {0,1}")
    ap.add_argument("--fine-max-points", type=int, default=2,
                    help="largest carrier tried on grids finer than {0,1}")
    args = ap.parse_args()

    print(f"{'grid':>8} {'|X|':>4} {'labelled':>9} {'classes':>8} {'seconds':>8}")
    for den in args.grids:
        grid = Grid.crisp() if den == 1 else Grid.uniform(den)
        top = args.max_points if den == 1 else args.fine_max_points
        for n in range(1, top + 1):
            start = time.perf_counter()
            labelled = count_topologies(small_carrier(n), grid)
            classes = count_topologies(small_carrier(n), grid, dedup=True)
            print(f"{'1/' + str(den):>8} {n:>4} {labelled:>9} {classes:>8} "
                  f"{time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main()
