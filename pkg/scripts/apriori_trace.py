"""Print the level-by-level Apriori trace (C_k after pruning, then L_k) for a
transaction file. Defaults to the AllElectronics example in data/.

    python scripts/apriori_trace.py --min-support 2
"""
import argparse
from pathlib import Path

from freqmine.ingest import parse_transactions
from freqmine.mining import apriori, join

DEFAULT = Path(__file__).resolve().parent.parent / "data" / "allelectronics.txt"


def fmt(itemset):
    return "{" + ",".join(itemset) + "}"


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("path", nargs="?", type=Path, default=DEFAULT)
    parser.add_argument("--min-support", type=int, default=2)
    parser.add_argument("--no-tid", action="store_true")
    parser.add_argument("--backend", default="bst")
    args = parser.parse_args()

    db = parse_transactions(args.path.read_text().splitlines(), has_tid=not args.no_tid)
    result = apriori(db, args.min_support, backend=args.backend)
    print(f"|D| = {len(db)}, min_sup = {args.min_support}, universe = {', '.join(db.universe)}")
    for k, level in enumerate(result.levels, start=1):
        if k > 1:
            joined = join(result.level(k - 1))
            print(f"C{k} joined ({len(joined)}): " + " ".join(map(fmt, joined)))
            print(f"C{k} pruned ({len(result.candidates[k])}): " + " ".join(map(fmt, result.candidates[k])))
        print(f"L{k} ({len(level)}): " + " ".join(f"{fmt(s)}:{n}" for s, n in level.items()))
    last = len(result.levels) + 1
    if last in result.candidates:
        joined = join(result.level(last - 1))
        print(f"C{last} joined ({len(joined)}): " + " ".join(map(fmt, joined)))
        print(f"C{last} pruned: empty -> stop")


if __name__ == "__main__":
    main()
