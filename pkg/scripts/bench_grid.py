"""Run every backend against every workload kind over a range of sizes.

    python scripts/bench_grid.py --sizes 100 1000 10000 > bench.tsv

The unbalanced tree on ascending input is quadratic, so it is skipped above
--bst-ascending-cap to keep the sweep short.
"""
import argparse
import sys

from freqmine.bench import KINDS, Workload, format_reports, run_benchmark
from freqmine.counters import BACKENDS


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--sizes", type=int, nargs="+", default=[100, 1000, 10000])
    parser.add_argument("--distinct-ratio", type=float, default=1.0, help="distinct keys as a fraction of n")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--bst-ascending-cap", type=int, default=5000)
    args = parser.parse_args()

    reports = []
    for n in args.sizes:
        distinct = max(1, min(n, int(n * args.distinct_ratio)))
        for kind in KINDS:
            spec = Workload(kind, n, distinct, args.seed)
            for backend in BACKENDS:
                if backend == "bst" and kind == "ascending" and distinct > args.bst_ascending_cap:
                    continue
                reports.append(run_benchmark(backend, spec, args.repeat))
                print(f"done {backend} {kind} n={n}", file=sys.stderr)
    sys.stdout.write(format_reports(reports))


if __name__ == "__main__":
    main()
