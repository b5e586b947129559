# compalg_kit/foundation/sampling.py

from __future__ import annotations

import hashlib
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Sequence

logger = logging.getLogger(__name__)


def trial_rng(seed: int, label: str, index: int) -> random.Random:
    """
    Counter-based stream: one independent generator per (seed, label, index).

    Trial i sees the same numbers whether it runs first, last or in a worker.
    """
    digest = hashlib.blake2b(f"{seed}:{label}:{index}".encode("utf-8"), digest_size=16)
    return random.Random(int.from_bytes(digest.digest(), "big"))


def _chunks(n: int, parts: int) -> List[range]:
    size = max(1, -(-n // parts))
    return [range(i, min(n, i + size)) for i in range(0, n, size)]


def _run_chunk(fn: Callable[[int], Any], indices: range) -> List[Any]:
    return [fn(i) for i in indices]


def run_trials(fn: Callable[[int], Any], trials: int, workers: int = 1) -> List[Any]:
    """
    Evaluate fn(0..trials-1), ordered by trial index.

    With workers > 1, fn must be picklable (module-level function or partial).
    """
    if workers <= 1 or trials < 2 * workers:
        return [fn(i) for i in range(trials)]
    logger.debug("dispatching %d trials over %d workers", trials, workers)
    results: List[Any] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_chunk, fn, chunk) for chunk in _chunks(trials, workers)]
        for future in futures:
            results.extend(future.result())
    return results


def parallel_map(fn: Callable[[Any], Any], items: Sequence[Any], workers: int = 1) -> List[Any]:
    """Order-preserving map over items, across a process pool when workers > 1."""
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
