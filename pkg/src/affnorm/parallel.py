"""A small deterministic worker pool.

``parallel_map`` preserves input order, so fan-outs over strata or primes
aggregate identically whatever the pool width.  Tasks must be module-level
callables with picklable arguments; with ``threads <= 1`` everything runs
in-process, which is also the fallback when forking is unavailable.
"""

import multiprocessing
from concurrent.futures import ProcessPoolExecutor


def parallel_map(fn, items, threads=1):
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        return [fn(item) for item in items]
    workers = min(threads, len(items))
    with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
        return list(pool.map(fn, items))
