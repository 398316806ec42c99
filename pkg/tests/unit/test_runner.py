"""Unit tests for CaseRunner."""

import threading
import time

import pytest

from cubezeta.core.errors import InvariantViolation
from cubezeta.core.runner import CaseRunner


def _sleeper(value, delay):
    def case():
        time.sleep(delay)
        return value

    return case


@pytest.mark.asyncio
async def test_results_keep_submission_order():
    """Test results come back in order even when later cases finish first."""
    runner = CaseRunner(threads=4)
    cases = [_sleeper(i, 0.02 * (5 - i)) for i in range(5)]

    results = await runner.run(cases)

    assert results == [0, 1, 2, 3, 4]


@pytest.mark.asyncio
async def test_concurrency_is_bounded():
    """Test at most `threads` cases run at once."""
    runner = CaseRunner(threads=2)
    lock = threading.Lock()
    active = [0]
    peak = [0]

    def case():
        with lock:
            active[0] += 1
            peak[0] = max(peak[0], active[0])
        time.sleep(0.02)
        with lock:
            active[0] -= 1

    await runner.run([case] * 6)

    assert peak[0] <= 2


@pytest.mark.asyncio
async def test_exception_propagates_after_all_cases():
    """Test a failing case raises once every case has finished."""
    runner = CaseRunner(threads=2)
    finished = []

    def bad():
        raise InvariantViolation("boom")

    def good():
        time.sleep(0.02)
        finished.append(True)

    with pytest.raises(InvariantViolation):
        await runner.run([bad, good, good])

    assert len(finished) == 2
    stats = runner.get_stats()
    assert stats["cases_failed"] == 1
    assert stats["cases_succeeded"] == 2


@pytest.mark.asyncio
async def test_empty():
    """Test an empty case list."""
    assert await CaseRunner(threads=1).run([]) == []


def test_run_sync_and_stats():
    """Test the blocking wrapper and the statistics."""
    runner = CaseRunner(threads=3, name="unit")

    assert runner.run_sync([lambda: 1, lambda: 2]) == [1, 2]

    stats = runner.get_stats()
    assert stats["name"] == "unit"
    assert stats["threads"] == 3
    assert stats["cases_processed"] == 2
    assert stats["cases_succeeded"] == 2
    assert stats["cases_failed"] == 0


def test_thread_count_floor():
    """Test zero threads falls back to the core count."""
    assert CaseRunner(threads=0).threads >= 1
