"""Run the theorem suite over every labelled graph with n <= --max-n.

Prints per-n timing and a per-check status table; exits 1 on any violation.
"""

import argparse
import sys
import time

from kecrit.generators import all_graphs
from kecrit.suite import CHECKS, DEFAULT_SEED, HOLDS, PREMISE_NOT_MET, VIOLATION, Summary, run_corpus


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--jobs", type=int, default=None)
    parser.add_argument("--no-poly", action="store_true", help="skip the oracle/poly comparisons")
    args = parser.parse_args()

    total = Summary()
    index = 0
    for n in range(args.max_n + 1):
        start = time.time()
        for report in run_corpus(all_graphs(n), args.seed, args.jobs, not args.no_poly):
            total.add(index, report)
            index += 1
        print(f"n={n}: {index} graphs so far, {len(total.violations)} violations ({time.time() - start:.1f}s)", flush=True)

    data = total.to_dict()
    print(f"{'check':22s} {HOLDS:>8s} {PREMISE_NOT_MET:>16s} {VIOLATION:>10s}")
    for name in CHECKS:
        if name in data["checks"]:
            c = data["checks"][name]
            print(f"{name:22s} {c[HOLDS]:8d} {c[PREMISE_NOT_MET]:16d} {c[VIOLATION]:10d}")
    for v in data["violations"][:20]:
        print("VIOLATION", v)
    return 0 if total.ok else 1


if __name__ == "__main__":
    sys.exit(main())
