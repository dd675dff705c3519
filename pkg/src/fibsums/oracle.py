"""Brute-force checks that share no code path with the closed forms."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from gmpy2 import mpz

from .engine import SumQuery, power_sum_value
from .expansions import Seq
from .kernel import fib, lucas


def power_terms(sequence: Seq | str, m: int, j: int, alternating: bool) -> Iterator[mpz]:
    """Yield (-1)**(a*k) * X_{mk}**j for k = 0, 1, 2, ..."""
    x = fib if Seq(sequence) is Seq.F else lucas
    for k in itertools.count():
        t = mpz(x(m * k)) ** j
        yield -t if alternating and k & 1 else t


def direct_power_sum(sequence: Seq | str, m: int, j: int, alternating: bool, n: int) -> int:
    total = mpz(0)
    for t in itertools.islice(power_terms(sequence, m, j, alternating), n + 1):
        total += t
    return int(total)


def gf_coefficients(sequence: Seq | str, m: int, count: int) -> list[int]:
    """First ``count`` coefficients of the generating function of X_{mk}.

    Steps x_k = L_m x_{k-1} - (-1)**m x_{k-2} from (0, F_m) or (2, L_m);
    only the two seed values touch the fast-doubling kernel.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    lm, q = lucas(m), (-1) ** m
    a, b = (0, fib(m)) if Seq(sequence) is Seq.F else (2, lm)
    out = []
    for _ in range(count):
        out.append(a)
        a, b = b, lm * b - q * a
    return out


@dataclass(frozen=True)
class OracleReport:
    query: SumQuery
    expected: int
    actual: int

    @property
    def match(self) -> bool:
        return self.expected == self.actual


def _check_block(block: tuple[Seq, int, int, bool, tuple[int, ...]]) -> list[OracleReport]:
    seq, m, j, alt, ns = block
    reports = []
    for n in ns:
        q = SumQuery(seq, m, j, alt, n)
        reports.append(OracleReport(q, direct_power_sum(seq, m, j, alt, n), power_sum_value(q)))
    return reports


def check_grid(
    m_range: Iterable[int],
    j_range: Iterable[int],
    n_range: Iterable[int],
    sequences: Iterable[Seq | str] = (Seq.F, Seq.L),
    parities: Iterable[bool] = (False, True),
    workers: int = 1,
) -> list[OracleReport]:
    """Compare closed-form values against direct sums over a grid.

    Reports come back ordered by (sequence, m, j, alternating, n) whatever
    the number of workers.
    """
    ns = tuple(sorted(n_range))
    blocks = [
        (seq, m, j, alt, ns)
        for seq in sorted({Seq(s) for s in sequences}, key=lambda s: s.value)
        for m in sorted(m_range)
        for j in sorted(j_range)
        for alt in sorted(set(parities))
    ]
    if not blocks or not ns:
        raise ValueError("grid ranges must be nonempty")
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_check_block, blocks))
    else:
        chunks = [_check_block(b) for b in blocks]
    return [r for chunk in chunks for r in chunk]
