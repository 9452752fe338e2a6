"""
Order-preserving parallel map used by atlas generation and lab sweeps.
"""

import multiprocessing as mp
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1, chunksize: int = 16) -> List[R]:
    """
    Apply fn to every item, in input order.

    Args:
        fn: Module-level (picklable) function
        items: Work items
        jobs: Worker process count; 1 or less runs in-process
        chunksize: Items handed to a worker at a time

    Returns:
        Results in the same order as items
    """
    if jobs <= 1:
        return [fn(item) for item in items]
    with mp.Pool(processes=jobs) as pool:
        return list(pool.imap(fn, items, chunksize))
