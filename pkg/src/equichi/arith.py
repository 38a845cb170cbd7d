"""Exact rationals and the small amount of elementary number theory the rest
of the package needs (factorization, Moebius, totient, divisors, Bernoulli).

All integers handled here are tiny (bounded by a small multiple of the genus),
so plain trial division is used throughout.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = [
    "Rational",
    "as_rational",
    "format_rational",
    "parse_rational",
    "factorize",
    "prime_divisors",
    "is_prime",
    "mobius",
    "euler_phi",
    "divisors",
    "bernoulli",
]

# Fraction keeps lowest terms with a positive denominator after every operation.
Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x) -> str:
    """Canonical ``"num/den"`` string; integers are written without ``/1``."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p, e), ...)`` with increasing ``p``."""
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors expects a positive integer, got {n}")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


_bernoulli_table: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """Bernoulli number ``B_m`` for even ``m >= 0`` (``B_2 = 1/6``).

    Uses the recurrence ``sum_{k<=m} C(m+1, k) B_k = 0``. Odd indices are
    refused since the package never needs them.
    """
    if m < 0 or m % 2:
        raise ValueError(f"bernoulli is only provided for even m >= 0, got {m}")
    if m < len(_bernoulli_table):
        return _bernoulli_table[m]
    with _bernoulli_lock:
        table = _bernoulli_table
        while len(table) <= m:
            j = len(table)
            acc = sum(comb(j + 1, k) * table[k] for k in range(j))
            table.append(-acc / (j + 1))
        return table[m]
