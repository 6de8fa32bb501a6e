import pytest

from esfg import run_theorem_suite


def test_suite_passes_at_small_sizes():
    outcome = run_theorem_suite(2)
    assert outcome.passed
    names = [check.name for check in outcome.checks]
    assert "counts-agree-on-both-paths" in names
    assert "oracle-agrees-with-validity-check" in names
    assert all(check.passed for check in outcome.checks)


def test_suite_rejects_oversized_requests():
    with pytest.raises(ValueError):
        run_theorem_suite(7)
