"""Exact Fibonacci/Lucas numbers and binomial coefficients.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``.
Large products inside the fast-doubling loop go through GMP (``gmpy2.mpz``)
because CPython's Karatsuba multiplication is far too slow at the index
sizes the benchmark reaches (F_n with n around 10**7).
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpz

__all__ = ["Fraction", "binomial", "fib", "fib_pair", "lucas", "lucas_pair", "sign"]


def sign(e: int) -> int:
    """Return (-1)**e for any integer e."""
    return -1 if e & 1 else 1


def _fib_pair_mpz(n: int) -> tuple[mpz, mpz]:
    a, b = mpz(0), mpz(1)
    for bit in bin(n)[2:]:
        # (F_k, F_{k+1}) -> (F_2k, F_2k+1)
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib_pair(n: int) -> tuple[int, int]:
    """Return ``(F_n, F_{n+1})`` by fast doubling, for ``n >= 0``.

    Uses F_2k = F_k (2 F_{k+1} - F_k) and F_2k+1 = F_k**2 + F_{k+1}**2,
    so the cost is O(log n) big-integer multiplications.
    """
    if n < 0:
        raise ValueError(f"fib_pair needs n >= 0, got {n}")
    a, b = _fib_pair_mpz(n)
    return int(a), int(b)


def fib(n: int) -> int:
    """F_n for any integer n (F_{-n} = (-1)**(n+1) F_n)."""
    if n < 0:
        return sign(n + 1) * fib(-n)
    return fib_pair(n)[0]


def lucas_pair(n: int) -> tuple[int, int]:
    """Return ``(L_n, F_n)`` for ``n >= 0`` from one fast-doubling pass."""
    a, b = fib_pair(n)
    return 2 * b - a, a


def lucas(n: int) -> int:
    """L_n for any integer n (L_{-n} = (-1)**n L_n)."""
    if n < 0:
        return sign(n) * lucas(-n)
    return lucas_pair(n)[0]


def binomial(n: int, k: int) -> int:
    """C(n, k) via the multiplicative formula; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs n, k >= 0, got ({n}, {k})")
    if k > n:
        return 0
    k = min(k, n - k)
    c = 1
    for i in range(1, k + 1):
        # exact at every step: c * (n - k + i) is divisible by i
        c = c * (n - k + i) // i
    return c
