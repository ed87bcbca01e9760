"""
Range sharding over a process pool.

Each worker builds its own PrimeCache once in the pool initializer; shards come back in
submission order, so output is the same for any worker count.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import config
from .conjecture_one import verify_first_range
from .prime_core import PrimeCache, build_cache, goldbach_scan, install_base_primes, load_base_primes

logger = logging.getLogger(__name__)

Shard = Tuple[int, int, int, int]  # (first, last, step, extra)
Task = Callable[[PrimeCache, Shard], List[Dict[str, object]]]

_worker_cache: Optional[PrimeCache] = None


def shard_range(first: int, last: int, step: int = 2, size: int = config.SHARD_SIZE,
                extra: int = 0) -> List[Shard]:
    """Contiguous shards of `size` values each covering first, first+step, ..., <= last."""
    if first > last:
        return []
    shards = []
    span = size * step
    for start in range(first, last + 1, span):
        shards.append((start, min(start + span - step, last), step, extra))
    return shards


def _init_worker(cache_limit: int, base_file: Optional[str] = None) -> None:
    global _worker_cache
    logging.basicConfig(level=config.LOG_LEVEL, format=config.LOG_FORMAT)
    if base_file:
        install_base_primes(load_base_primes(base_file))
    _worker_cache = build_cache(cache_limit)


def _run_in_worker(task: Task, shard: Shard) -> List[Dict[str, object]]:
    return task(_worker_cache, shard)


def map_shards(task: Task, shards: Sequence[Shard], cache_limit: int, workers: int = 1,
               cache: Optional[PrimeCache] = None, base_file: Optional[str] = None) -> Iterator[List[Dict[str, object]]]:
    """Yield task(cache, shard) for every shard, in shard order.

    Workers load `base_file` (a GBL1 base-prime file) once each when it is given.
    """
    if workers <= 1:
        cache = cache if cache is not None and cache.limit >= cache_limit else build_cache(cache_limit)
        for shard in shards:
            yield task(cache, shard)
        return
    logger.info(f"Running {len(shards)} shards on {workers} workers")
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(cache_limit, base_file)) as pool:
        yield from pool.map(_run_in_worker, repeat(task), shards)


def verify_first_task(cache: PrimeCache, shard: Shard) -> List[Dict[str, object]]:
    first, last, step, s = shard
    return verify_first_range(first, last, step, s, cache).to_dict("records")


def goldbach_task(cache: PrimeCache, shard: Shard) -> List[Dict[str, object]]:
    first, last, _, block = shard
    return goldbach_scan(first, last, cache, block=block).to_dict("records")
