"""Synthetic workloads and per-backend measurements.

Timings are wall-clock and machine dependent; the structural fields
(height, comparisons) are deterministic for a given backend and workload
and are what the test-suite checks.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .counters import TREE_BACKENDS, new_counter

KINDS = ("random", "ascending", "zipf")
# random.Random is CPython's Mersenne Twister
RNG_ALGORITHM = "mt19937"
DEFAULT_REPEAT = 3


class InvalidWorkload(ValueError):
    pass


@dataclass(frozen=True)
class Workload:
    kind: str = "random"
    n: int = 1000
    distinct: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidWorkload(f"unknown workload kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.n < 1:
            raise InvalidWorkload(f"n must be >= 1, got {self.n}")
        if not 1 <= self.distinct <= self.n:
            raise InvalidWorkload(f"distinct must be in [1, n={self.n}], got {self.distinct}")


@dataclass(frozen=True)
class BenchReport:
    backend: str
    workload: Workload
    insert_ns: int
    lookup_ns: int
    inorder_ns: int
    height: Optional[int]
    comparisons: Optional[int]
    entries: int
    rng: str = RNG_ALGORITHM

    def row(self) -> str:
        w = self.workload
        fields = [
            self.backend, w.kind, w.n, w.distinct, w.seed,
            self.insert_ns, self.lookup_ns, self.inorder_ns,
            "-" if self.height is None else self.height,
            "-" if self.comparisons is None else self.comparisons,
        ]
        return "\t".join(map(str, fields)) + "\n"


REPORT_HEADER = "backend\tkind\tn\tdistinct\tseed\tinsert_ns\tlookup_ns\tinorder_ns\theight\tcomparisons\n"


def key_names(distinct: int) -> list[str]:
    # zero padding keeps lexicographic order equal to numeric order
    width = max(3, len(str(distinct - 1)))
    return [f"k{i:0{width}d}" for i in range(distinct)]


def generate_workload(spec: Workload) -> list[str]:
    """Deterministic key sequence of length ``spec.n`` using every one of the
    ``spec.distinct`` keys at least once.

    ascending: the keys in sorted order, cycling until ``n`` are emitted.
    random:    each key once plus ``n - distinct`` uniform draws, shuffled.
    zipf:      each key once plus ``n - distinct`` draws with weight 1/rank,
               where ranks are a seeded permutation of the keys; shuffled.
    """
    keys = key_names(spec.distinct)
    if spec.kind == "ascending":
        return [keys[i % spec.distinct] for i in range(spec.n)]
    rng = random.Random(spec.seed)
    extra = spec.n - spec.distinct
    if spec.kind == "random":
        seq = keys + [keys[rng.randrange(spec.distinct)] for _ in range(extra)]
    else:
        ranked = keys[:]
        rng.shuffle(ranked)
        weights = [1.0 / r for r in range(1, spec.distinct + 1)]
        seq = keys + rng.choices(ranked, weights=weights, k=extra)
    rng.shuffle(seq)
    return seq


def run_benchmark(backend: str, spec: Workload, repeat: int = DEFAULT_REPEAT) -> BenchReport:
    """Insert the workload, look up every distinct key, run one inorder walk.

    Each phase is timed ``repeat`` times on a fresh counter and the minimum
    is kept. ``comparisons`` counts key comparisons made by the inserts; it is
    ``None`` for the hash backend, whose probing happens inside ``dict``.
    """
    tokens = generate_workload(spec)
    probes = sorted(set(tokens))
    best = [None, None, None]
    height = comparisons = None
    entries = 0
    for _ in range(max(1, repeat)):
        counter = new_counter(backend)
        t0 = time.perf_counter_ns()
        for tok in tokens:
            counter.insert(tok)
        t1 = time.perf_counter_ns()
        for key in probes:
            counter.lookup(key)
        t2 = time.perf_counter_ns()
        listing = counter.inorder()
        t3 = time.perf_counter_ns()
        for i, dt in enumerate((t1 - t0, t2 - t1, t3 - t2)):
            best[i] = dt if best[i] is None else min(best[i], dt)
        entries = len(listing)
        if backend in TREE_BACKENDS:
            height = counter.height()
        if backend != "hash":
            comparisons = counter.comparisons
    return BenchReport(backend, spec, best[0], best[1], best[2], height, comparisons, entries)


def format_reports(reports: Iterable[BenchReport]) -> str:
    return REPORT_HEADER + "".join(r.row() for r in reports)
