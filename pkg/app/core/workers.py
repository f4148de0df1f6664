"""
Order-preserving map over a process pool
"""

import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from app.core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], max_workers: int = None, chunksize: int = 64) -> List[R]:
    """Apply fn to every item; results come back in input order.

    With one worker everything runs inline. fn must be a module-level
    callable so it can be pickled. Calls made from inside a worker
    process run inline.
    """
    max_workers = settings.MAX_WORKERS if max_workers is None else max_workers
    items = list(items)
    if max_workers <= 1 or len(items) < 2 or multiprocessing.parent_process() is not None:
        return [fn(item) for item in items]
    logger.debug(f"Mapping {len(items)} items over {max_workers} worker processes")
    with ProcessPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
