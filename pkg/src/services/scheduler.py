"""
Scheduler Service - ordered parallel evaluation for sweeps and verification
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List

logger = logging.getLogger(__name__)


class SweepScheduler:
    """Thread pool whose map keeps input order, so output is thread-count independent"""

    def __init__(self, threads: int = 1):
        self.threads = max(1, int(threads))
        self.executor = None
        self.logger = logger

    def start(self):
        """Start the worker pool"""
        if self.threads > 1 and self.executor is None:
            self.executor = ThreadPoolExecutor(max_workers=self.threads, thread_name_prefix="sweep")
        self.logger.debug(f"Scheduler started with {self.threads} thread(s)")

    def stop(self):
        """Stop the worker pool"""
        if self.executor is not None:
            self.executor.shutdown(wait=True)
            self.executor = None
        self.logger.debug("Scheduler stopped")

    def map(self, func: Callable, items: Iterable) -> List:
        if self.executor is None:
            return [func(item) for item in items]
        return list(self.executor.map(func, items))

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, *exc):
        self.stop()
        return False
