"""One test per acceptance criterion; each prints a single PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines inline.
"""

import pytest

from crthrottle.verify import CRITERIA, run_criterion

LINES: list[str] = []

BUDGET_SECONDS = {1: 60, 2: 300, 3: 1800, 4: 120, 5: 900, 6: 1800, 7: 10, 8: 1800, 9: 60}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    title, fn = CRITERIA[number]
    result = run_criterion(number, title, fn)
    LINES.append(result.line())
    print("\n" + result.line())
    assert result.passed, result.line()
    assert result.seconds < BUDGET_SECONDS[number], f"{title} took {result.seconds:.0f}s"
