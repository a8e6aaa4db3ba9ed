"""Acceptance suite: one test per criterion, run at the full subset limit.

Each criterion is exact (integer equality, no tolerances) and prints its own
pass line; run with ``pytest tests/test_acceptance.py -v`` to see one line
per criterion, or ``rootprimes selftest --deep`` for the same checks from
the command line.
"""

import time

import pytest

from rootprimes.selftest import CRITERIA

FULL_LIMIT = 18

# stated runtime budgets, seconds
BUDGETS = {"1": 1, "2": 60, "3": 60, "4": 60, "5": 30, "6": 120, "7": 60, "8": 10, "9": 10, "10": 120}


@pytest.mark.parametrize("ident,name,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance_criterion(ident, name, fn):
    start = time.perf_counter()
    detail = fn(FULL_LIMIT)
    elapsed = time.perf_counter() - start
    print(f"[PASS] criterion {ident}: {name} ({elapsed:.1f}s) - {detail}")
    assert elapsed < BUDGETS[ident], f"criterion {ident} exceeded its {BUDGETS[ident]}s budget"
