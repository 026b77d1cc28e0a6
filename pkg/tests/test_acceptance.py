"""Acceptance suite: one test per criterion, full settings (p = 31, K = 2).

Each test records a ``[PASS]``/``[FAIL]`` line that conftest prints in the
terminal summary.  Run as a script for the same lines without pytest.
"""
import sys

import pytest

from severi.verify import ITEMS, run_item

RESULTS: dict = {}


@pytest.mark.parametrize("number", sorted(ITEMS))
def test_criterion(number):
    item = run_item(number)
    RESULTS[number] = item
    print(item.line())
    assert not item.skipped
    assert item.passed, item.line()


def main() -> int:
    items = [run_item(n) for n in sorted(ITEMS)]
    for it in items:
        print(it.line())
    return 0 if all(it.passed for it in items) else 1


if __name__ == "__main__":
    sys.exit(main())
