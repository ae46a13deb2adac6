"""Order-preserving map over a thread pool."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def resolve_threads(threads: int) -> int:
    if threads and threads > 0:
        return threads
    return os.cpu_count() or 1


def pmap(fn, items, threads: int = 1) -> list:
    """``[fn(x) for x in items]``, optionally on ``threads`` workers."""
    items = list(items)
    n = resolve_threads(threads)
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
