import pytest
from hypothesis import given
from hypothesis import strategies as st

from freqmine.ingest import (
    STRIP_CHARS,
    MalformedLine,
    Transaction,
    TransactionDatabase,
    format_transactions,
    parse_transactions,
    tokenize,
)

from conftest import SENTENCE


def reference_tokenize(text):
    """Character-by-character walk, written without str.split/str.strip."""
    tokens, cur = [], []
    for ch in text + " ":
        if ch.isspace():
            if cur:
                lo, hi = 0, len(cur)
                while lo < hi and cur[lo] in STRIP_CHARS:
                    lo += 1
                while hi > lo and cur[hi - 1] in STRIP_CHARS:
                    hi -= 1
                if lo < hi:
                    tokens.append("".join(cur[lo:hi]).lower())
                cur = []
        else:
            cur.append(ch)
    return tokens


def test_tokenize_sentence():
    assert tokenize(SENTENCE) == ["i", "reach", "my", "goal", "by", "my", "uncompromised", "practice"]


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_fold_and_strip():
    assert tokenize("My my, MY!") == ["my", "my", "my"]
    assert reference_tokenize("My my, MY!") == ["my", "my", "my"]


def test_tokenize_keeps_interior_punctuation():
    assert tokenize("(don't) e.g. ...") == ["don't", "e.g"]


@given(st.text(alphabet=st.sampled_from("aBz \t\n.,!'()Ü-x"), max_size=60))
def test_tokenize_matches_reference_walk(text):
    assert tokenize(text) == reference_tokenize(text)


@given(st.text())
def test_tokens_have_no_whitespace_and_are_not_pure_punctuation(text):
    for tok in tokenize(text):
        assert tok
        assert not any(ch.isspace() for ch in tok)
        assert tok[0] not in STRIP_CHARS and tok[-1] not in STRIP_CHARS


def test_parse_fig1(fig1_db):
    assert len(fig1_db) == 9
    assert fig1_db.universe == ("I1", "I2", "I3", "I4", "I5")
    assert fig1_db.transactions[0] == Transaction(("I1", "I2", "I5"), "T100")
    assert fig1_db.transactions[-1].tid == "T900"


def test_parse_empty():
    db = parse_transactions([], has_tid=True)
    assert len(db) == 0 and db.universe == ()


def test_parse_dedupes_and_sorts():
    db = parse_transactions(["T1\tI2, I2, I1"], has_tid=True)
    assert db.transactions == (Transaction(("I1", "I2"), "T1"),)
    assert tuple(sorted(set(["I2", "I2", "I1"]))) == db.transactions[0].items


def test_parse_whitespace_separated_tid():
    db = parse_transactions("T7 a, b\n\n   \nT8  c", has_tid=True)
    assert [(t.tid, t.items) for t in db] == [("T7", ("a", "b")), ("T8", ("c",))]


def test_parse_without_tid_skips_empty_item_lines():
    db = parse_transactions(["b,a", " , ,", "", "c"])
    assert [t.items for t in db] == [("a", "b"), ("c",)]
    assert all(t.tid is None for t in db)


@pytest.mark.parametrize("lines, line_no", [
    (["T1\tI1", "T2"], 2),
    (["", "T1\t  "], 2),
    (["T9"], 1),
])
def test_parse_malformed(lines, line_no):
    with pytest.raises(MalformedLine) as exc:
        parse_transactions(lines, has_tid=True)
    assert exc.value.line_no == line_no


def test_tid_with_empty_item_list_is_skipped_not_malformed():
    db = parse_transactions(["T1\t,,", "T2\tx"], has_tid=True)
    assert [t.tid for t in db] == ["T2"]


item = st.text(alphabet="abcdeXYZ019 ", min_size=1, max_size=4)
line = st.lists(item, max_size=6).map(lambda xs: ", ".join(xs))


@given(st.lists(line, max_size=12))
def test_parsed_items_strictly_ascending(lines):
    db = parse_transactions(lines)
    for t in db:
        assert all(a < b for a, b in zip(t.items, t.items[1:]))
    assert db.universe == tuple(sorted({i for t in db for i in t.items}))


@given(st.lists(line, max_size=12), st.booleans())
def test_parse_roundtrip(lines, with_tid):
    if with_tid:
        lines = [f"T{i}\t{body}" for i, body in enumerate(lines) if body.replace(",", "").strip()]
    db = parse_transactions(lines, has_tid=with_tid)
    again = parse_transactions(format_transactions(db), has_tid=with_tid)
    assert again == db


def test_from_itemsets_applies_parser_rules():
    db = TransactionDatabase.from_itemsets([["b", "a", "a"], [], ["c"]])
    assert [t.items for t in db] == [("a", "b"), ("c",)]
    assert db.universe == ("a", "b", "c")
