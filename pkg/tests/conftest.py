from pathlib import Path

import pytest
from hypothesis import settings

from freqmine.ingest import parse_transactions

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("fast", max_examples=20, deadline=None)
settings.load_profile("ci")

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"

SENTENCE = "i reach my goal by my uncompromised practice"

# filled in by test_acceptance.py
ACCEPTANCE_RESULTS = {}


@pytest.fixture
def fig1_path():
    return DATA / "allelectronics.txt"


@pytest.fixture
def fig1_db(fig1_path):
    return parse_transactions(fig1_path.read_text().splitlines(), has_tid=True)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
