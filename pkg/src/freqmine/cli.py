"""Batch command line: ``freqmine count | mine | bench``.

Exit codes: 0 success, 2 unreadable input (or bad usage), 3 malformed
transaction line, 4 invalid min support or workload parameters.
"""
from __future__ import annotations

import argparse
import itertools
import sys
from typing import Optional, Sequence, TextIO

from . import __version__
from .bench import DEFAULT_REPEAT, KINDS, RNG_ALGORITHM, InvalidWorkload, Workload, format_reports, run_benchmark
from .counters import BACKENDS, format_counts, new_counter
from .ingest import MalformedLine, parse_transactions, tokenize
from .mining import InvalidMinSupport, apriori, format_report, resolve_min_support

EXIT_OK = 0
EXIT_UNREADABLE = 2
EXIT_MALFORMED = 3
EXIT_INVALID = 4

COUNT_EPILOG = """\
Input is UTF-8 text. Tokens are whitespace-separated words, lower-cased,
with leading/trailing .,;:!?"'()[]{} stripped; empty tokens are dropped.

Output (TSV, ascending token order, one line per distinct token):
  <token>\\t<count>
"""

MINE_EPILOG = """\
Input: one transaction per line, items separated by commas, e.g.
  I1,I2,I5            (default)
  T100<TAB>I1,I2,I5   (with --tid; the id ends at the first tab, or at the
                       first whitespace when the line has no tab)
Items are trimmed, deduplicated and sorted. Blank lines and lines without
items are skipped and do not count towards |D|.

--min-support: an integer is an absolute transaction count (>= 1). A value
with a decimal point (or a fraction such as 2/9) is relative, in (0, 1],
and is converted to ceil(fraction * |D|), never below 1. So 0.22 on nine
transactions means 2.

Output (TSV, by k ascending then itemset in lexicographic order):
  <k>\\t<item1,item2,...>\\t<support>
With --summary a final line "# |D|=<n> min_sup=<s> levels=<m>" is added.
"""

BENCH_EPILOG = f"""\
--backend and --kind accept comma-separated lists (or may be repeated); one
row is produced for each backend x kind combination. Keys are k000, k001, ...
Workloads are generated with Python's random.Random ({RNG_ALGORITHM}) seeded
by --seed. Each phase is timed --repeat times (default {DEFAULT_REPEAT}) and the
minimum reported.

Output (TSV with header):
  backend kind n distinct seed insert_ns lookup_ns inorder_ns height comparisons
height is '-' for non-tree backends; comparisons is '-' for hash.
"""


def _backend(value: str) -> str:
    if value not in BACKENDS:
        raise argparse.ArgumentTypeError(f"choose from {', '.join(BACKENDS)}")
    return value


def _list_of(choices):
    def parse(value: str) -> list[str]:
        out = [v.strip() for v in value.split(",") if v.strip()]
        bad = [v for v in out if v not in choices]
        if bad or not out:
            raise argparse.ArgumentTypeError(f"choose from {', '.join(choices)}")
        return out
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freqmine", description="Frequency counting and frequent itemset mining.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    raw = argparse.RawDescriptionHelpFormatter

    p = sub.add_parser("count", help="word frequencies of a text", epilog=COUNT_EPILOG, formatter_class=raw)
    p.add_argument("--backend", type=_backend, default="avl", help="counter backend: %s (default: avl)" % ", ".join(BACKENDS))
    p.add_argument("input", nargs="?", default="-", help="text file, or - for standard input (default)")

    p = sub.add_parser("mine", help="frequent itemsets of a transaction file", epilog=MINE_EPILOG, formatter_class=raw)
    p.add_argument("--min-support", required=True, help="absolute count (int) or relative fraction in (0, 1]")
    p.add_argument("--tid", action="store_true", help="first field of each line is a transaction id")
    p.add_argument("--backend", type=_backend, default="avl", help="counter backend for the 1-itemset pass (default: avl)")
    p.add_argument("--summary", action="store_true", help="append a '# |D|=.. min_sup=.. levels=..' line")
    p.add_argument("--workers", type=int, default=1, help="threads used for support counting (default: 1); output is unaffected")
    p.add_argument("input", nargs="?", default="-", help="transaction file, or - for standard input (default)")

    p = sub.add_parser("bench", help="benchmark counter backends", epilog=BENCH_EPILOG, formatter_class=raw)
    p.add_argument("--backend", type=_list_of(BACKENDS), action="append", help="backend(s) (default: avl)")
    p.add_argument("--kind", type=_list_of(KINDS), action="append", help="workload kind(s): random, ascending, zipf (default: random)")
    p.add_argument("--n", type=int, default=1000, help="insert operations per workload (default: 1000)")
    p.add_argument("--distinct", type=int, default=None, help="distinct keys, <= n (default: n)")
    p.add_argument("--seed", type=int, default=0, help="PRNG seed (default: 0)")
    p.add_argument("--repeat", type=int, default=DEFAULT_REPEAT, help=f"timing repetitions, minimum kept (default: {DEFAULT_REPEAT})")
    return parser


def _read_input(path: str, stdin: TextIO) -> str:
    if path == "-":
        buf = getattr(stdin, "buffer", None)
        return buf.read().decode("utf-8") if buf is not None else stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def run_count(args, stdin, stdout, stderr) -> int:
    try:
        text = _read_input(args.input, stdin)
    except (OSError, UnicodeDecodeError) as e:
        print(f"freqmine count: cannot read {args.input}: {e}", file=stderr)
        return EXIT_UNREADABLE
    counter = new_counter(args.backend)
    counter.update(tokenize(text))
    stdout.write(format_counts(counter.inorder()))
    return EXIT_OK


def run_mine(args, stdin, stdout, stderr) -> int:
    try:
        text = _read_input(args.input, stdin)
    except (OSError, UnicodeDecodeError) as e:
        print(f"freqmine mine: cannot read {args.input}: {e}", file=stderr)
        return EXIT_UNREADABLE
    try:
        db = parse_transactions(text.splitlines(), has_tid=args.tid)
    except MalformedLine as e:
        print(f"freqmine mine: {args.input}: malformed line {e.line_no}: no items after transaction id", file=stderr)
        return EXIT_MALFORMED
    try:
        min_sup = resolve_min_support(args.min_support, len(db))
    except InvalidMinSupport as e:
        print(f"freqmine mine: {e}", file=stderr)
        return EXIT_INVALID
    result = apriori(db, min_sup, backend=args.backend, workers=max(1, args.workers))
    stdout.write(format_report(result, summary=args.summary))
    return EXIT_OK


def run_bench(args, stdin, stdout, stderr) -> int:
    backends = list(dict.fromkeys(itertools.chain.from_iterable(args.backend or [["avl"]])))
    kinds = list(dict.fromkeys(itertools.chain.from_iterable(args.kind or [["random"]])))
    distinct = args.n if args.distinct is None else args.distinct
    try:
        workloads = [Workload(kind, args.n, distinct, args.seed) for kind in kinds]
    except InvalidWorkload as e:
        print(f"freqmine bench: {e}", file=stderr)
        return EXIT_INVALID
    if args.repeat < 1:
        print("freqmine bench: --repeat must be >= 1", file=stderr)
        return EXIT_INVALID
    reports = [run_benchmark(b, w, repeat=args.repeat) for b in backends for w in workloads]
    stdout.write(format_reports(reports))
    return EXIT_OK


COMMANDS = {"count": run_count, "mine": run_mine, "bench": run_bench}


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args, stdin, stdout, stderr)


def entry() -> None:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8", newline="\n")
    sys.exit(main())
