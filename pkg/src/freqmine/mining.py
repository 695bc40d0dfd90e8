"""Level-wise (Apriori) frequent itemset mining.

Itemsets are plain tuples of items in ascending order. A level is a dict
mapping each itemset to its absolute support, kept in ascending itemset
order so reports are reproducible byte for byte.
"""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from .counters import FrequencyCounter, new_counter
from .ingest import TransactionDatabase

Itemset = tuple[str, ...]
Level = dict[Itemset, int]

MAX_ORACLE_UNIVERSE = 20


class MixedSizes(ValueError):
    pass


class UniverseTooLarge(ValueError):
    pass


class InvalidMinSupport(ValueError):
    pass


@dataclass(frozen=True)
class MiningResult:
    levels: list[Level]
    min_sup: int
    db_size: int
    backend: str
    # pruned candidate sets C_k for k >= 2, including the final (possibly empty) one
    candidates: dict[int, list[Itemset]] = field(default_factory=dict)

    def itemsets(self) -> Level:
        out: Level = {}
        for level in self.levels:
            out.update(level)
        return out

    def level(self, k: int) -> Level:
        return self.levels[k - 1] if 1 <= k <= len(self.levels) else {}

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)


def resolve_min_support(value: Union[str, int, float, Fraction], db_size: int) -> int:
    """Turn an absolute count or a relative fraction into an absolute threshold.

    Integers (or integer strings like ``"2"``) are absolute counts and must be
    at least 1. Anything else is read as a fraction in (0, 1] and converted as
    ``ceil(fraction * db_size)``, never going below 1. Decimal strings are
    converted exactly, so ``"0.1"`` of 30 transactions is 3, not 4.
    """
    if isinstance(value, bool):
        raise InvalidMinSupport(f"invalid min support {value!r}")
    if isinstance(value, str):
        text = value.strip()
        try:
            value = int(text)
        except ValueError:
            try:
                value = Fraction(text)
            except (ValueError, ZeroDivisionError):
                raise InvalidMinSupport(f"invalid min support {text!r}") from None
            if value.denominator == 1 and "." not in text and "e" not in text.lower():
                value = int(value)
    if isinstance(value, int):
        if value < 1:
            raise InvalidMinSupport(f"absolute min support must be >= 1, got {value}")
        return value
    frac = Fraction(str(value)) if isinstance(value, float) else Fraction(value)
    if not 0 < frac <= 1:
        raise InvalidMinSupport(f"relative min support must be in (0, 1], got {value}")
    return max(1, math.ceil(frac * db_size))


def count_1_itemsets(db: TransactionDatabase, backend: str = "avl") -> FrequencyCounter:
    counter = new_counter(backend)
    for t in db:
        for item in t.items:
            counter.insert(item)
    return counter


def frequent_1(counter: FrequencyCounter, min_sup: int) -> Level:
    return {(key,): count for key, count in counter.inorder() if count >= min_sup}


def join(prev_level: Iterable[Itemset]) -> list[Itemset]:
    """Self-join of the frequent (k-1)-itemsets into candidate k-itemsets.

    Two itemsets are merged when they agree on everything but their last item;
    the candidate is the shared prefix followed by both last items in order.
    """
    prev = sorted(set(prev_level))
    if not prev:
        return []
    size = len(prev[0])
    if any(len(s) != size for s in prev):
        raise MixedSizes("join needs itemsets of one size, got sizes "
                         + ", ".join(map(str, sorted({len(s) for s in prev}))))
    out = []
    # sorted order makes each shared-prefix group contiguous
    start = 0
    while start < len(prev):
        prefix = prev[start][:-1]
        end = start + 1
        while end < len(prev) and prev[end][:-1] == prefix:
            end += 1
        for i in range(start, end):
            for j in range(i + 1, end):
                out.append(prev[i] + (prev[j][-1],))
        start = end
    return out


def prune(candidates: Iterable[Itemset], prev_level: Iterable[Itemset]) -> list[Itemset]:
    """Drop every candidate having a (k-1)-subset outside ``prev_level``."""
    frequent = set(prev_level)
    return [
        c for c in candidates
        if all(sub in frequent for sub in combinations(c, len(c) - 1))
    ]


def contains(items: Sequence[str], itemset: Sequence[str]) -> bool:
    """Subset test by a merged walk over two ascending sequences."""
    i = 0
    n = len(items)
    for want in itemset:
        while i < n and items[i] < want:
            i += 1
        if i == n or items[i] != want:
            return False
        i += 1
    return True


def _count_chunk(transactions, candidates) -> Counter:
    counts = Counter()
    for t in transactions:
        if len(t.items) < len(candidates[0]):
            continue
        for c in candidates:
            if contains(t.items, c):
                counts[c] += 1
    return counts


def count_support(db: TransactionDatabase, candidates: Iterable[Itemset], workers: int = 1) -> Level:
    """Support of every candidate, zero-support ones included.

    With ``workers > 1`` the transactions are split into contiguous chunks
    counted on a thread pool and the partial counts summed; the result is
    identical to the sequential scan.
    """
    candidates = list(candidates)
    if not candidates:
        return {}
    txns = db.transactions
    if workers <= 1 or len(txns) < 2:
        totals = _count_chunk(txns, candidates)
    else:
        step = math.ceil(len(txns) / workers)
        chunks = [txns[i:i + step] for i in range(0, len(txns), step)]
        totals = Counter()
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(lambda ch: _count_chunk(ch, candidates), chunks):
                totals.update(partial)
    return {c: totals.get(c, 0) for c in candidates}


def apriori(db: TransactionDatabase, min_sup: int, backend: str = "avl", workers: int = 1) -> MiningResult:
    if isinstance(min_sup, bool) or not isinstance(min_sup, int) or min_sup < 1:
        raise InvalidMinSupport(f"min support must be an integer >= 1, got {min_sup!r}")
    levels: list[Level] = []
    trace: dict[int, list[Itemset]] = {}
    current = frequent_1(count_1_itemsets(db, backend), min_sup)
    k = 2
    while current:
        levels.append(current)
        cands = prune(join(current), current)
        trace[k] = cands
        if not cands:
            break
        supports = count_support(db, cands, workers)
        current = {c: s for c, s in sorted(supports.items()) if s >= min_sup}
        k += 1
    return MiningResult(levels, min_sup, len(db), backend, trace)


def brute_force_frequent(db: TransactionDatabase, min_sup: int) -> Level:
    """Enumerate every nonempty subset of the item universe and keep those
    contained in at least ``min_sup`` transactions. Test oracle only."""
    universe = db.universe
    if len(universe) > MAX_ORACLE_UNIVERSE:
        raise UniverseTooLarge(f"{len(universe)} items exceeds the oracle limit of {MAX_ORACLE_UNIVERSE}")
    baskets = [frozenset(t.items) for t in db]
    out: Level = {}
    for r in range(1, len(universe) + 1):
        for combo in combinations(universe, r):
            s = frozenset(combo)
            support = sum(1 for b in baskets if s <= b)
            if support >= min_sup:
                out[combo] = support
    return out


def format_report(result: MiningResult, summary: bool = False) -> str:
    lines = []
    for k, level in enumerate(result.levels, start=1):
        for itemset in sorted(level):
            lines.append(f"{k}\t{','.join(itemset)}\t{level[itemset]}\n")
    if summary:
        lines.append(f"# |D|={result.db_size} min_sup={result.min_sup} levels={len(result.levels)}\n")
    return "".join(lines)
