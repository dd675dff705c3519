"""Wall-clock comparison of closed-form evaluation against direct summation."""

from __future__ import annotations

import time
from dataclasses import dataclass

from gmpy2 import mpz

from .engine import SumQuery, power_sum_value
from .oracle import power_terms


@dataclass
class BenchResult:
    query: SumQuery
    closed_seconds: float
    closed_value: int
    direct_seconds: float
    direct_value: int | None  # None when the time budget ran out
    terms_summed: int

    @property
    def finished(self) -> bool:
        return self.direct_value is not None

    @property
    def speedup(self) -> float:
        """Direct/closed time ratio; a lower bound when direct did not finish."""
        return self.direct_seconds / max(self.closed_seconds, 1e-9)

    @property
    def values_equal(self) -> bool | None:
        return None if self.direct_value is None else self.direct_value == self.closed_value


def run_bench(q: SumQuery, budget: float | None = None) -> BenchResult:
    """Time both routes for ``q``; give up on direct summation after ``budget`` seconds."""
    t0 = time.perf_counter()
    closed = power_sum_value(q)
    t1 = time.perf_counter()

    total = mpz(0)
    done = 0
    deadline = None if budget is None else time.perf_counter() + budget
    start = time.perf_counter()
    for term in power_terms(q.sequence, q.m, q.j, q.alternating):
        if done > q.n:
            break
        total += term
        done += 1
        if deadline is not None and done % 64 == 0 and time.perf_counter() > deadline:
            break
    direct_seconds = time.perf_counter() - start
    direct = int(total) if done == q.n + 1 else None
    return BenchResult(q, t1 - t0, closed, direct_seconds, direct, done)
