"""Row-partitioned execution for grid computations.

Workers share only read-only inputs and write disjoint output rows; the
kernels release the GIL, so plain threads scale.  Results never depend on
scheduling because every row is computed by the same compiled code path.
"""
from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional


class Cancelled(RuntimeError):
    """Raised when a grid computation is cancelled between row boundaries."""


def run_rows(n_rows: int, row_fn: Callable[[int], None], threads: int = 1,
             cancel: Optional[threading.Event] = None) -> None:
    """Run row_fn(j) for every row, optionally across threads.

    threads <= 1 runs serially.  A set cancel event stops work at the next
    row boundary and raises Cancelled; partially written output must not be
    used by the caller.
    """
    if threads <= 1:
        for j in range(n_rows):
            if cancel is not None and cancel.is_set():
                raise Cancelled(f"cancelled at row {j}/{n_rows}")
            row_fn(j)
        return

    def worker(j: int) -> None:
        if cancel is not None and cancel.is_set():
            return
        row_fn(j)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        # Consume the iterator so worker exceptions propagate.
        for _ in pool.map(worker, range(n_rows)):
            pass
    if cancel is not None and cancel.is_set():
        raise Cancelled("cancelled")
