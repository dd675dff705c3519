"""Closed forms for sum_{k=0}^n (+-1)**k X_{Mk}, X in {F, L}.

A :class:`ClosedForm` is a list of atoms in F_{M(n+1)}, F_{Mn}, 1 and
(n+1), each optionally multiplied by (-1)**n. Lucas sums are written with
Fibonacci atoms (dividing by F_M) so the whole pipeline shares one atom
vocabulary.
"""

from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from gmpy2 import mpz

from .errors import UsageError
from .expansions import Seq
from .kernel import _fib_pair_mpz, fib, lucas, sign


class Tag(str, enum.Enum):
    F_N1 = "F_n1"
    F_N = "F_n"
    CONST = "const"
    LINEAR = "linear"


_TAG_RANK = {Tag.F_N1: 0, Tag.F_N: 1, Tag.CONST: 2, Tag.LINEAR: 3}


@dataclass(frozen=True)
class ClosedFormAtom:
    tag: Tag
    modulus: int | None
    coeff: Fraction
    sigma: int = 0

    def __post_init__(self):
        if self.tag in (Tag.F_N1, Tag.F_N):
            if self.modulus is None or self.modulus < 1:
                raise ValueError(f"{self.tag.value} atom needs modulus >= 1")
        elif self.modulus is not None:
            raise ValueError(f"{self.tag.value} atom has no modulus")
        if self.tag is Tag.LINEAR and self.sigma:
            raise ValueError("linear atom cannot carry (-1)**n")
        if self.sigma not in (0, 1):
            raise ValueError(f"sigma must be 0 or 1, got {self.sigma}")

    def sort_key(self):
        return (-(self.modulus or 0), _TAG_RANK[self.tag], self.sigma)

    def index(self, n: int) -> int | None:
        if self.tag is Tag.F_N1:
            return self.modulus * (n + 1)
        if self.tag is Tag.F_N:
            return self.modulus * n
        return None


@dataclass(frozen=True)
class ClosedForm:
    atoms: tuple[ClosedFormAtom, ...] = ()

    @classmethod
    def of(cls, atoms: Iterable[ClosedFormAtom]) -> "ClosedForm":
        acc: dict[tuple, Fraction] = defaultdict(Fraction)
        for a in atoms:
            acc[(a.tag, a.modulus, a.sigma)] += a.coeff
        merged = [ClosedFormAtom(t, mod, c, s) for (t, mod, s), c in acc.items() if c != 0]
        return cls(tuple(sorted(merged, key=ClosedFormAtom.sort_key)))

    def __add__(self, other: "ClosedForm") -> "ClosedForm":
        return ClosedForm.of(self.atoms + other.atoms)

    def scaled(self, factor: Fraction) -> "ClosedForm":
        return ClosedForm.of(
            ClosedFormAtom(a.tag, a.modulus, a.coeff * factor, a.sigma) for a in self.atoms
        )

    def moduli(self) -> set[int]:
        return {a.modulus for a in self.atoms if a.modulus is not None}


def _denominators(M: int) -> tuple[int, int, int, int, int]:
    q = sign(M)
    lm, fm = lucas(M), fib(M)
    d_minus, d_plus = 1 - lm + q, 1 + lm + q
    # L_M >= 1 and the (-1)**M term can only cancel the 1 when L_M >= 1
    assert d_minus <= -1 and d_plus >= 1, (M, d_minus, d_plus)
    return q, lm, fm, d_minus, d_plus


def shifted_sum_closed_form(sequence: Seq | str, M: int, alternating: bool) -> ClosedForm:
    """Closed form of sum_{k=0}^n (-1)**(a*k) X_{Mk} for spacing M >= 1."""
    sequence = Seq(sequence)
    if M < 1:
        raise UsageError(f"spacing must be >= 1, got {M}")
    q, lm, fm, dm, dp = _denominators(M)
    F1, F0, C = Tag.F_N1, Tag.F_N, Tag.CONST
    if sequence is Seq.F and not alternating:
        atoms = [
            ClosedFormAtom(C, None, Fraction(fm, dm)),
            ClosedFormAtom(F1, M, Fraction(-1, dm)),
            ClosedFormAtom(F0, M, Fraction(q, dm)),
        ]
    elif sequence is Seq.F:
        atoms = [
            ClosedFormAtom(C, None, Fraction(-fm, dp)),
            ClosedFormAtom(F1, M, Fraction(1, dp), 1),
            ClosedFormAtom(F0, M, Fraction(q, dp), 1),
        ]
    elif not alternating:
        # 2 - zL = A(1 - zL + qz^2) + (B + Cz)(1 - z): A at z=1, B at z=0, C from z^2
        a = Fraction(2 - lm, dm)
        atoms = [
            ClosedFormAtom(C, None, a),
            ClosedFormAtom(F1, M, (2 - a) / fm),
            ClosedFormAtom(F0, M, a * q / fm),
        ]
    else:
        a = Fraction(2 + lm, dp)
        atoms = [
            ClosedFormAtom(C, None, a),
            ClosedFormAtom(F1, M, Fraction(lm + 2 * q, dp * fm), 1),
            ClosedFormAtom(F0, M, Fraction(-q * (2 + lm), dp * fm), 1),
        ]
    return ClosedForm.of(atoms)


def constant_sum_closed_form(coeff: Fraction | int, sigma: int, alternating: bool) -> ClosedForm:
    """Closed form of sum_{k=0}^n coeff * (-1)**((sigma + a) k)."""
    coeff = Fraction(coeff)
    if (sigma + alternating) % 2 == 0:
        return ClosedForm.of([ClosedFormAtom(Tag.LINEAR, None, coeff)])
    return ClosedForm.of(
        [ClosedFormAtom(Tag.CONST, None, coeff / 2, 0), ClosedFormAtom(Tag.CONST, None, coeff / 2, 1)]
    )


def eval_closed_form(cf: ClosedForm, n: int) -> int | Fraction:
    """Exact value of ``cf`` at ``n``: an ``int`` when integral, else a ``Fraction``.

    Coefficients are brought to a common denominator first so that the large
    Fibonacci values are only ever multiplied by small integers.
    """
    if n < 0:
        raise UsageError(f"n must be >= 0, got {n}")
    den = 1
    for a in cf.atoms:
        den = math.lcm(den, a.coeff.denominator)
    total = mpz(0)
    cache: dict[int, mpz] = {}
    for a in cf.atoms:
        idx = a.index(n)
        if idx is None:
            v = mpz(n + 1) if a.tag is Tag.LINEAR else mpz(1)
        else:
            if idx not in cache:
                cache[idx] = _fib_pair_mpz(idx)[0]
            v = cache[idx]
        term = v * (a.coeff.numerator * (den // a.coeff.denominator))
        total += -term if a.sigma and n & 1 else term
    if total % den == 0:
        return int(total // den)
    return Fraction(int(total), den)

