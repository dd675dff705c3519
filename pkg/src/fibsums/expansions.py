"""Powers F_n**j and L_n**j as linear combinations of F/L at multiples of n.

Two shapes are produced for even-exponent Fibonacci powers. The *paper*
(literal) shape uses atoms F_{2s(n+1)} and F_{2sn}; the *canonical* shape
folds each such pair into a single L_{2sn}. Every other case has no offset
atoms and both shapes coincide.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InconsistencyError, UsageError
from .kernel import binomial, fib, lucas, sign


class Seq(str, enum.Enum):
    F = "F"
    L = "L"


class Kind(str, enum.Enum):
    F = "F"
    L = "L"
    CONST = "const"


class Form(str, enum.Enum):
    CANONICAL = "canonical"
    LITERAL = "paper"


_KIND_RANK = {Kind.F: 0, Kind.L: 1, Kind.CONST: 2}


@dataclass(frozen=True)
class ExpansionTerm:
    """``coeff * (-1)**(sigma*n) * X_{stride*n}`` (or ``X_{stride*(n+1)}``)."""

    kind: Kind
    stride: int | None
    coeff: Fraction
    sigma: int = 0
    offset_one: bool = False

    def __post_init__(self):
        if self.kind is Kind.CONST:
            if self.stride is not None or self.offset_one:
                raise ValueError("constant terms carry no stride")
        elif self.stride is None or self.stride < 1:
            raise ValueError(f"{self.kind.value} term needs stride >= 1")
        if self.sigma not in (0, 1):
            raise ValueError(f"sigma must be 0 or 1, got {self.sigma}")

    def sort_key(self):
        # paper order: highest stride first, (n+1)-atom before n-atom
        return (_KIND_RANK[self.kind], -(self.stride or 0), not self.offset_one, self.sigma)

    def value(self, n: int) -> Fraction:
        if self.kind is Kind.CONST:
            atom = 1
        else:
            idx = self.stride * (n + 1 if self.offset_one else n)
            atom = fib(idx) if self.kind is Kind.F else lucas(idx)
        return self.coeff * sign(self.sigma * n) * atom


def merge_terms(terms: Iterable[ExpansionTerm]) -> tuple[ExpansionTerm, ...]:
    """Combine like terms, drop zeros, and sort deterministically."""
    acc: dict[tuple, Fraction] = defaultdict(Fraction)
    for t in terms:
        acc[(t.kind, t.stride, t.offset_one, t.sigma)] += t.coeff
    merged = [
        ExpansionTerm(kind, stride, coeff, sigma, offset)
        for (kind, stride, offset, sigma), coeff in acc.items()
        if coeff != 0
    ]
    return tuple(sorted(merged, key=ExpansionTerm.sort_key))


@dataclass(frozen=True)
class PowerExpansion:
    sequence: Seq
    exponent: int
    form: Form
    terms: tuple[ExpansionTerm, ...]

    def __call__(self, n: int) -> int:
        return evaluate_expansion(self, n)


def _odd_fib_terms(j: int) -> list[ExpansionTerm]:
    scale = Fraction(1, 5 ** ((j - 1) // 2))
    return [
        ExpansionTerm(Kind.F, j - 2 * s, sign(s) * binomial(j, s) * scale, s % 2)
        for s in range((j + 1) // 2)
    ]


def _even_fib_literal_terms(j: int) -> list[ExpansionTerm]:
    h = j // 2
    scale = Fraction(1, 5**h)
    terms = []
    for s in range(1, h + 1):
        sigma = (h + s) % 2
        # (-1)**((n+1)*sigma) = (-1)**sigma * (-1)**(sigma*n)
        c = sign(sigma) * binomial(j, h + s) * scale
        f2s = fib(2 * s)
        terms.append(ExpansionTerm(Kind.F, 2 * s, c * Fraction(2, f2s), sigma, True))
        terms.append(ExpansionTerm(Kind.F, 2 * s, -c * Fraction(lucas(2 * s), f2s), sigma))
    # C(j,h)/(2*5**h) * (1 - (-1)**n + (-1)**h + (-1)**(n+h))
    half = Fraction(binomial(j, h), 2 * 5**h)
    terms.append(ExpansionTerm(Kind.CONST, None, half * (1 + sign(h)), 0))
    terms.append(ExpansionTerm(Kind.CONST, None, half * (sign(h) - 1), 1))
    return terms


def _even_fib_canonical_terms(j: int) -> list[ExpansionTerm]:
    h = j // 2
    scale = Fraction(1, 5**h)
    terms = [
        ExpansionTerm(Kind.L, 2 * s, sign(h + s) * binomial(j, h + s) * scale, (h + s) % 2)
        for s in range(1, h + 1)
    ]
    terms.append(ExpansionTerm(Kind.CONST, None, sign(h) * binomial(j, h) * scale, h % 2))
    return terms


def _lucas_terms(j: int) -> list[ExpansionTerm]:
    terms = [
        ExpansionTerm(Kind.L, j - 2 * s, Fraction(binomial(j, s)), s % 2)
        for s in range((j + 1) // 2)
    ]
    if j % 2 == 0:
        # constant carries (-1)**(n*j/2); the table rows L^4 (+6) and L^8 (+70) fix this
        terms.append(ExpansionTerm(Kind.CONST, None, Fraction(binomial(j, j // 2)), (j // 2) % 2))
    return terms


def expand_power(sequence: Seq | str, j: int, form: Form | str = Form.CANONICAL) -> PowerExpansion:
    """Expand F_n**j or L_n**j into shifted-index atoms."""
    sequence, form = Seq(sequence), Form(form)
    if j < 1:
        raise UsageError(f"exponent j must be >= 1, got {j}")
    if sequence is Seq.L:
        terms = _lucas_terms(j)
    elif j % 2:
        terms = _odd_fib_terms(j)
    elif form is Form.LITERAL:
        terms = _even_fib_literal_terms(j)
    else:
        terms = _even_fib_canonical_terms(j)
    return PowerExpansion(sequence, j, form, merge_terms(terms))


def canonicalize(e: PowerExpansion) -> PowerExpansion:
    """Rewrite (n+1)-offset atoms into n-atoms and merge like terms.

    F_{a(n+1)} = (L_a F_{an} + F_a L_{an}) / 2
    L_{a(n+1)} = (L_a L_{an} + 5 F_a F_{an}) / 2
    """
    out = []
    for t in e.terms:
        if not t.offset_one:
            out.append(t)
            continue
        a = t.stride
        la, fa = lucas(a), fib(a)
        half = t.coeff / 2
        if t.kind is Kind.F:
            out.append(ExpansionTerm(Kind.F, a, half * la, t.sigma))
            out.append(ExpansionTerm(Kind.L, a, half * fa, t.sigma))
        else:
            out.append(ExpansionTerm(Kind.L, a, half * la, t.sigma))
            out.append(ExpansionTerm(Kind.F, a, half * 5 * fa, t.sigma))
    return PowerExpansion(e.sequence, e.exponent, Form.CANONICAL, merge_terms(out))


def evaluate_expansion(e: PowerExpansion, n: int) -> int:
    if n < 0:
        raise UsageError(f"n must be >= 0, got {n}")
    total = sum((t.value(n) for t in e.terms), Fraction(0))
    if total.denominator != 1:
        raise InconsistencyError(
            f"{e.sequence.value}^{e.exponent} ({e.form.value}) at n={n} gave {total}"
        )
    return total.numerator


@dataclass(frozen=True)
class GirardWaringForm:
    """X_{m*n} written as a polynomial in X_m.

    ``lhs`` names the left side (``"F"`` or ``"L"``). ``terms`` holds
    ``(power, coeff)`` pairs. For a Fibonacci base the power-of-five factor
    is kept out of ``coeff``; :meth:`evaluate` puts it back.
    """

    base: Seq
    m: int
    n: int
    lhs: Seq
    terms: tuple[tuple[int, int], ...]

    def evaluate(self) -> int:
        if self.base is Seq.L:
            x = lucas(self.m)
            return sum(c * x**p for p, c in self.terms)
        x = fib(self.m)
        drop = 1 if self.lhs is Seq.F else 0
        return sum(c * 5 ** ((p - drop) // 2) * x**p for p, c in self.terms)


def girard_waring_power_form(sequence: Seq | str, m: int, n: int) -> GirardWaringForm:
    """Express L_{mn} via powers of L_m, or F_{mn}/L_{mn} via powers of F_m (m odd).

    Built on x**n + y**n = sum_k (-1)**k n/(n-k) C(n-k,k) (x+y)**(n-2k) (xy)**k.
    """
    sequence = Seq(sequence)
    if m < 1 or n < 1:
        raise UsageError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    if sequence is Seq.F and m % 2 == 0:
        raise UsageError("Fibonacci base needs odd m (x+y = sqrt5*F_m only then)")
    terms = []
    for k in range(n // 2 + 1):
        # n/(n-k) * C(n-k, k) == C(n-k, k) + C(n-k-1, k-1), always integral
        d, r = divmod(n * binomial(n - k, k), n - k)
        assert r == 0
        c = sign(k) * d
        if sequence is Seq.L:
            c *= sign(m * k)  # (xy)**k with xy = (-1)**m
        terms.append((n - 2 * k, c))
    lhs = Seq.F if sequence is Seq.F and n % 2 else Seq.L
    return GirardWaringForm(sequence, m, n, lhs, tuple(terms))
