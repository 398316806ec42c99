"""Concurrent execution of independent cases with deterministic result order."""

import asyncio
import logging
import os
import time
from typing import Any, Callable, Dict, List, Optional, Sequence

logger = logging.getLogger(__name__)


class CaseRunner:
    """Runs independent, CPU-bound cases on worker threads.

    Cases are plain callables. At most ``threads`` of them run at once, and the
    results come back in submission order whatever the scheduling, so anything
    rendered from them is identical for every thread count.
    """

    def __init__(self, threads: Optional[int] = None, name: str = "cases"):
        """Initialize runner.

        Args:
            threads: Maximum number of concurrently running cases. Defaults to all cores
            name: Label used in log messages
        """
        self.threads = max(1, threads or os.cpu_count() or 1)
        self.name = name

        self._cases_processed = 0
        self._cases_succeeded = 0
        self._cases_failed = 0

    async def run(self, cases: Sequence[Callable[[], Any]]) -> List[Any]:
        """Run all cases and return their results in order.

        Args:
            cases: Zero-argument callables

        Returns:
            One result per case, in the order given

        Raises:
            The first exception raised by a case, after all cases have finished
        """
        semaphore = asyncio.Semaphore(self.threads)
        logger.info(f"Running {len(cases)} {self.name} on {self.threads} worker(s)")

        async def run_one(index: int, case: Callable[[], Any]) -> Any:
            async with semaphore:
                start_time = time.perf_counter()
                self._cases_processed += 1
                try:
                    result = await asyncio.to_thread(case)
                except Exception as e:
                    self._cases_failed += 1
                    logger.error(f"{self.name}[{index}] raised {type(e).__name__}: {e}")
                    raise
                processing_time_ms = (time.perf_counter() - start_time) * 1000
                self._cases_succeeded += 1
                logger.debug(f"{self.name}[{index}] finished in {processing_time_ms:.2f}ms")
                return result

        outcomes = await asyncio.gather(
            *(run_one(i, case) for i, case in enumerate(cases)),
            return_exceptions=True,
        )

        logger.info(
            f"{self.name} final stats: "
            f"processed={self._cases_processed}, "
            f"succeeded={self._cases_succeeded}, "
            f"failed={self._cases_failed}"
        )

        for outcome in outcomes:
            if isinstance(outcome, BaseException):
                raise outcome
        return list(outcomes)

    def run_sync(self, cases: Sequence[Callable[[], Any]]) -> List[Any]:
        """Blocking wrapper around run for callers without an event loop."""
        return asyncio.run(self.run(cases))

    def get_stats(self) -> Dict[str, Any]:
        """Get runner statistics."""
        return {
            "name": self.name,
            "threads": self.threads,
            "cases_processed": self._cases_processed,
            "cases_succeeded": self._cases_succeeded,
            "cases_failed": self._cases_failed,
        }
