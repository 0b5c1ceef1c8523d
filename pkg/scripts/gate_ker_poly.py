"""Compare ker_poly with the exact ker on every labelled graph up to --max-n.

Prints one progress line per vertex count and exits non-zero on the first
disagreement, dumping the graph in graph6.
"""

import argparse
import sys
import time

from kecrit.formats import to_graph6
from kecrit.generators import all_graphs
from kecrit.oracle import ExactOracle
from kecrit.poly import ker_poly


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--min-n", type=int, default=0)
    args = parser.parse_args()
    for n in range(args.min_n, args.max_n + 1):
        start = time.time()
        count = 0
        for g in all_graphs(n):
            count += 1
            if ker_poly(g) != ExactOracle(g).ker:
                print(f"MISMATCH n={n} graph6={to_graph6(g).decode()}", flush=True)
                return 1
        print(f"n={n}: {count} graphs agree ({time.time() - start:.1f}s)", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
