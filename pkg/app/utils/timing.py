"""
Monotonic per-op timing and latency aggregation.
"""

import time
from typing import List, Sequence

import numpy as np


class Stopwatch:
    """Context manager recording elapsed `perf_counter_ns` time."""

    __slots__ = ("start", "elapsed_ns")

    def __init__(self) -> None:
        self.start = 0
        self.elapsed_ns = 0

    def __enter__(self) -> "Stopwatch":
        self.start = time.perf_counter_ns()
        return self

    def __exit__(self, *exc) -> None:
        self.elapsed_ns = time.perf_counter_ns() - self.start


def latency_stats(samples: Sequence[int]) -> dict:
    """Mean, median and 99th percentile of nanosecond samples (zeros when empty)."""
    if not samples:
        return {"mean": 0.0, "p50": 0.0, "p99": 0.0}
    arr = np.asarray(samples, dtype=np.float64)
    p50, p99 = np.percentile(arr, [50, 99])
    return {"mean": float(arr.mean()), "p50": float(p50), "p99": float(p99)}


def mean_ns(totals: List[int]) -> float:
    return float(np.mean(totals)) if totals else 0.0
