"""Acceptance criteria, one test each, run exactly as stated.

Each test prints a single PASS/FAIL line (visible with ``pytest -v -s`` or in
the captured output of failures).
"""

import pytest

from bbwlab import acceptance


def _report(result):
    print("\n" + result.line())
    return result


@pytest.mark.parametrize("number", sorted(acceptance.CRITERIA))
def test_criterion(number, capsys):
    result = acceptance.CRITERIA[number]()
    with capsys.disabled():
        _report(result)
    assert result.passed, result.failures[:5]


def test_criterion_1_on_the_closed_form_range():
    # the closed form is claimed for l <= n/2 - 1
    result = acceptance.criterion_1(max_l=lambda n: n // 2 - 1)
    assert result.passed, result.failures[:5]


def test_criterion_1_mismatch_set_is_exactly_the_extra_odd_range():
    result = acceptance.criterion_1()
    keys = sorted(f[:4] for f in result.failures)
    expected = []
    for n in range(5, 13, 2):
        m = (n - 1) // 2
        expected += [(n, m - 1, m, m + 1), (n, m, m - 1, m), (n, m, m, m), (n, m, m, m + 1)]
    assert keys == sorted(expected)
    # every mismatch sits in degree n-2
    for f in result.failures:
        assert f[4].startswith(f"deg {f[0] - 2}:")
