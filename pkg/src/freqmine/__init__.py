"""Frequency counting on pluggable search-tree dictionaries, and Apriori
frequent itemset mining built on top of it."""

__version__ = "0.1.0"

from .counters import BACKENDS, FrequencyCounter, UnsupportedBackend, new_counter
from .ingest import MalformedLine, Transaction, TransactionDatabase, parse_transactions, tokenize
from .mining import (
    MiningResult,
    apriori,
    brute_force_frequent,
    count_1_itemsets,
    count_support,
    frequent_1,
    join,
    prune,
)
