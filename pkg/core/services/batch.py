"""
Batch runner for sweeps over many inputs.
"""

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any, Callable, List, Sequence

logger = logging.getLogger(__name__)


class BatchRunner:
    """
    Apply a picklable function to every item, inline or on a process pool.

    Results come back in input order whatever the completion order, so
    output is identical for any number of workers.
    """

    def __init__(self, jobs: int = 1):
        self.jobs = max(1, jobs)

    def map(self, func: Callable[..., Any], items: Sequence[Any], *args) -> List[Any]:
        total = len(items)
        if self.jobs == 1 or total <= 1:
            return [func(item, *args) for item in items]

        results: List[Any] = [None] * total
        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            future_to_index = {
                executor.submit(func, item, *args): index
                for index, item in enumerate(items)
            }

            completed = 0
            for future in as_completed(future_to_index):
                index = future_to_index[future]
                results[index] = future.result()
                completed += 1
                if completed % 500 == 0 or completed == total:
                    logger.info(f"Batch progress {completed}/{total}")

        return results
