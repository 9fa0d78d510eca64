"""The fourteen acceptance criteria, one test each.

Each test prints a single PASS/FAIL line (visible even with output capture).
"""

import time

import pytest

from weylcat.acceptance import CHECKS


@pytest.mark.parametrize("name,check", CHECKS, ids=[n.split(" ", 1)[0] for n, _ in CHECKS])
def test_acceptance(name, check, capsys):
    t0 = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} [{elapsed:5.2f}s] {name}: {detail}")
    assert ok, detail
    assert elapsed <= 10, f"{name} took {elapsed:.1f}s"
