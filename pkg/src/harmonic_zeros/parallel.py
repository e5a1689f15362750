"""Worker-count control for the embarrassingly parallel pieces.

The environment variable HARMONIC_ZEROS_THREADS caps the worker count;
0 (the default) means "use all CPUs".  Results always come back in input
order so parallel runs are bit-identical to serial ones.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "HARMONIC_ZEROS_THREADS"


def worker_count() -> int:
    raw = os.environ.get(ENV_VAR, "0").strip()
    try:
        k = int(raw)
    except ValueError:
        k = 0
    if k <= 0:
        k = os.cpu_count() or 1
    return max(1, k)


def ordered_map(fn, items) -> list:
    items = list(items)
    if len(items) <= 1:
        return [fn(x) for x in items]
    k = min(worker_count(), len(items))
    if k <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))
