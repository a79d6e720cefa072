"""Collects one pass/fail line per acceptance criterion for the terminal summary."""

from __future__ import annotations

import time
from contextlib import contextmanager

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str, limit_s: float):
    """Time the body, record PASS/FAIL, then fail the test if over ``limit_s``."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        in_time = elapsed < limit_s
        status = "PASS" if ok and in_time else "FAIL"
        extra = "" if in_time else f" (over the {limit_s:g}s limit)"
        RESULTS[number] = f"criterion {number}: {status}  {title}  [{elapsed:.2f}s < {limit_s:g}s]{extra}"
    assert in_time, f"criterion {number} took {elapsed:.2f}s, limit {limit_s:g}s"
