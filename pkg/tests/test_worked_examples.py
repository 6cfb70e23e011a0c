from __future__ import annotations

import pytest

from phicert.worked_examples import Case, load_cases, run_case, run_cases

CASES = load_cases()


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.id)
def test_case(case):
    result = run_case(case)
    assert result.passed, (result.observed, result.error)


def test_ids_unique_and_tagged():
    ids = [c.id for c in CASES]
    assert len(ids) == len(set(ids))
    assert all(c.tags for c in CASES)


def test_failures_are_reported_not_raised():
    bad = Case("bad", "count", {"n": 2, "m": 2, "rhs": 25}, {"count": 5})
    assert not run_case(bad).passed
    broken = Case("broken", "nonsense", {}, {})
    result = run_case(broken)
    assert not result.passed and "nonsense" in result.error


def test_filter_by_tag():
    selected = run_cases(CASES, "thm9")
    assert selected and all("thm9" in r.case.tags for r in selected)
