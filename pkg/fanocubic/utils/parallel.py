"""
Data parallel scans over disjoint index ranges.

Results are combined in range order so output never depends on the
number of workers.
"""
import logging

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, TypeVar

from ..data_structures import ScanRange

logger = logging.getLogger(__name__)

R = TypeVar('R')


def parallel_map(func: Callable[[ScanRange], R], total: int, threads: int=1, min_size: int=4096) -> List[R]:
    """
    Apply `func` to consecutive ranges covering ``range(total)``.
    """
    ranges = ScanRange.split(total, max(1, threads), min_size)
    if len(ranges) <= 1 or threads <= 1:
        return [func(r) for r in ranges]

    logger.debug("Scanning %d indices in %d ranges on %d threads", total, len(ranges), threads)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, ranges))


def parallel_sum(func: Callable[[ScanRange], int], total: int, threads: int=1, min_size: int=4096) -> int:
    return sum(parallel_map(func, total, threads, min_size))
