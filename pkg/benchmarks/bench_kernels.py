"""Compare the compiled and numpy kernel backends on full table computations.

    python benchmarks/bench_kernels.py [--sizes 500 1000 2000] [--threads 1 4]

Both backends must produce identical tables; the script exits non-zero if not.
"""
import argparse
import sys
import time

import numpy as np

from cutkit import compute_table, parse_ruleset
from cutkit.kernels import compiled_available

RULESETS = ["1,2", "1,4", "1,2,7", "2,all>=5"]


def timed(spec, n, backend, threads):
    start = time.perf_counter()
    table = compute_table(spec, n, threads=threads, backend=backend)
    return time.perf_counter() - start, table


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[500, 1000, 2000])
    parser.add_argument("--threads", type=int, nargs="+", default=[1, 4])
    parser.add_argument("--rulesets", nargs="+", default=RULESETS)
    args = parser.parse_args(argv)

    if not compiled_available():
        print("compiled extension not built; only the python backend can run", file=sys.stderr)
        return 1
    mismatches = 0
    print(f"{'ruleset':<10} {'N':>6} {'python s':>10} " + " ".join(f"{'compiled x' + str(t):>13}" for t in args.threads) + f" {'speedup':>8}")
    for text in args.rulesets:
        spec = parse_ruleset(text)
        for n in args.sizes:
            t_py, ref = timed(spec, n, "python", 1)
            cells = []
            best = None
            for threads in args.threads:
                t_c, table = timed(spec, n, "compiled", threads)
                if not np.array_equal(table.values, ref.values):
                    mismatches += 1
                cells.append(f"{t_c:13.4f}")
                best = t_c if best is None else min(best, t_c)
            print(f"{text:<10} {n:>6} {t_py:10.4f} " + " ".join(cells) + f" {t_py / best:8.1f}")
    if mismatches:
        print(f"{mismatches} backend mismatches", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
