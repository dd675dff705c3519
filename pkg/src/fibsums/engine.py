"""Closed forms and values for sum_{k=0}^n (+-1)**k X_{mk}**j.

The power X_n**j is expanded canonically, n is replaced by m*k, and each
resulting term coeff * (-1)**(sigma*m*k) * X_{t*m*k} is summed with the
matching shifted-sum closed form. The combined parity of a term is
``(sigma*m + alternating) % 2``; for even m every term sum is plain unless
the outer sum alternates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InconsistencyError, UsageError
from .expansions import Form, Kind, Seq, expand_power
from .shifted_sums import (
    ClosedForm,
    constant_sum_closed_form,
    eval_closed_form,
    shifted_sum_closed_form,
)


@dataclass(frozen=True)
class SumQuery:
    sequence: Seq
    m: int
    j: int
    alternating: bool = False
    n: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "sequence", Seq(self.sequence))
        if self.m < 1:
            raise UsageError(f"spacing m must be >= 1, got {self.m}")
        if self.j < 1:
            raise UsageError(f"exponent j must be >= 1, got {self.j}")
        if self.n is not None and self.n < 0:
            raise UsageError(f"bound n must be >= 0, got {self.n}")

    def at(self, n: int) -> "SumQuery":
        return SumQuery(self.sequence, self.m, self.j, self.alternating, n)


@lru_cache(maxsize=1024)
def _closed_form(sequence: Seq, m: int, j: int, alternating: bool) -> ClosedForm:
    total = ClosedForm()
    for term in expand_power(sequence, j, Form.CANONICAL).terms:
        parity = (term.sigma * m + alternating) % 2
        if term.kind is Kind.CONST:
            part = constant_sum_closed_form(term.coeff, (term.sigma * m) % 2, alternating)
        else:
            seq = Seq.F if term.kind is Kind.F else Seq.L
            part = shifted_sum_closed_form(seq, term.stride * m, bool(parity)).scaled(term.coeff)
        total = total + part
    return total


def power_sum_closed_form(q: SumQuery) -> ClosedForm:
    return _closed_form(q.sequence, q.m, q.j, q.alternating)


def power_sum_value(q: SumQuery) -> int:
    if q.n is None:
        raise UsageError("a value query needs a bound n")
    v = eval_closed_form(power_sum_closed_form(q), q.n)
    if not isinstance(v, int):
        raise InconsistencyError(f"non-integral total {v} for {q}")
    return v
