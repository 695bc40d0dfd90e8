"""Text and transaction-file ingestion.

Two entry points: :func:`tokenize` turns free text into a stream of
lower-cased word tokens, and :func:`parse_transactions` reads a
line-oriented basket file into a :class:`TransactionDatabase`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

# Only stripped from the ends of a token; interior punctuation is kept.
STRIP_CHARS = ".,;:!?\"'()[]{}"


class MalformedLine(ValueError):
    def __init__(self, line_no: int, line: str = ""):
        self.line_no = line_no
        self.line = line
        super().__init__(f"line {line_no}: no item field after transaction id")


@dataclass(frozen=True)
class Transaction:
    items: tuple[str, ...]
    tid: Optional[str] = None

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class TransactionDatabase:
    transactions: tuple[Transaction, ...] = ()
    universe: tuple[str, ...] = field(default=())

    @classmethod
    def from_transactions(cls, transactions: Iterable[Transaction]) -> "TransactionDatabase":
        transactions = tuple(transactions)
        universe = sorted({item for t in transactions for item in t.items})
        return cls(transactions, tuple(universe))

    @classmethod
    def from_itemsets(cls, baskets: Iterable[Iterable[str]]) -> "TransactionDatabase":
        """Build a database from plain item collections, applying the parser's
        dedupe/sort/drop-empty rules."""
        txns = []
        for basket in baskets:
            items = tuple(sorted(set(basket)))
            if items:
                txns.append(Transaction(items))
        return cls.from_transactions(txns)

    def __len__(self) -> int:
        return len(self.transactions)

    def __iter__(self):
        return iter(self.transactions)


def tokenize(text: str) -> list[str]:
    tokens = []
    for raw in text.split():
        tok = raw.strip(STRIP_CHARS).lower()
        if tok:
            tokens.append(tok)
    return tokens


def _split_items(field_text: str) -> tuple[str, ...]:
    items = {item.strip() for item in field_text.split(",")}
    items.discard("")
    return tuple(sorted(items))


def parse_transactions(lines: Iterable[str], has_tid: bool = False) -> TransactionDatabase:
    """Parse one transaction per line.

    With ``has_tid`` the first field (up to the first tab, or the first run
    of whitespace when the line has no tab) is the transaction id. Items are
    comma separated; duplicates are collapsed and the result sorted. Blank
    lines and lines with no items are skipped.

    Raises:
        MalformedLine: ``has_tid`` is set and a line has nothing after its id.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    txns = []
    for line_no, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        tid = None
        body = line
        if has_tid:
            if "\t" in line:
                tid, _, body = line.partition("\t")
                tid = tid.strip()
            else:
                parts = line.split(None, 1)
                tid = parts[0]
                body = parts[1] if len(parts) > 1 else ""
            if not body.strip():
                raise MalformedLine(line_no, line)
        items = _split_items(body)
        if items:
            txns.append(Transaction(items, tid))
    return TransactionDatabase.from_transactions(txns)


def format_transactions(db: TransactionDatabase) -> str:
    """Canonical serialization: ``tid<TAB>item,item,...`` per line (tid omitted
    when the database carries none)."""
    with_tid = len(db) > 0 and all(t.tid is not None for t in db)
    out = []
    for t in db:
        body = ",".join(t.items)
        out.append(f"{t.tid}\t{body}\n" if with_tid else body + "\n")
    return "".join(out)
