"""Deterministic, optionally threaded mapping over grid chunks.

The environment variable FRACSPLINE_THREADS caps the worker count; results
are always concatenated in submission order, so output bytes do not depend
on the thread count.
"""

import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "FRACSPLINE_THREADS"


def thread_count() -> int:
    raw = os.environ.get(ENV_VAR, "1")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, n)


def map_ordered(fn, items, threads=None):
    """Apply fn to each item, preserving order regardless of thread count."""
    items = list(items)
    n = thread_count() if threads is None else max(1, int(threads))
    if n <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))
