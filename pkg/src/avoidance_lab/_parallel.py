"""Deterministic fan-out for exhaustive counts.

Work is split into a fixed task list that does not depend on the worker count;
partial results are merged in task order, so the result is identical for any
number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def map_reduce(fn: Callable[[T], R], tasks: Iterable[T], threads: int, start: R) -> R:
    tasks = list(tasks)
    threads = max(1, int(threads or 1))
    if threads == 1 or len(tasks) <= 1:
        results = map(fn, tasks)
        total = start
        for r in results:
            total = total + r
        return total
    workers = min(threads, len(tasks), os.cpu_count() or threads)
    total = start
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for r in pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * workers))):
            total = total + r
    return total
