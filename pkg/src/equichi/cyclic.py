"""Counting residues mod k: root-of-unity character sums, the number of
zero-sum residue tuples with prescribed gcd classes, and the number of
connected cyclic monodromies over a genus-h base.

Every closed form has a brute-force twin that enumerates residues directly.
No complex numbers are used; sums of roots of unity are either evaluated
through Moebius/totient identities or reduced exactly in Z[x]/(Phi_d).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from .arith import divisors, euler_phi, is_prime, mobius, prime_divisors
from .conventions import DEFAULT, Conventions

__all__ = [
    "ResidueConstraint",
    "BudgetExceeded",
    "c_sum",
    "c_sum_bruteforce",
    "count_residue_tuples",
    "count_residue_tuples_bruteforce",
    "prime_power_tuple_count",
    "count_connected_monodromies",
    "count_connected_monodromies_bruteforce",
    "cyclotomic_polynomial",
]

ENUMERATION_BUDGET = 10**8


class BudgetExceeded(ValueError):
    """A brute-force oracle was asked to enumerate too many tuples."""


@dataclass(frozen=True)
class ResidueConstraint:
    """Modulus ``k`` and a multiset of gcd classes ``l_i``, each dividing ``k``.

    The classes are stored sorted; an empty multiset is allowed.
    """

    k: int
    l: tuple[int, ...] = ()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"modulus must be positive, got {self.k}")
        bad = [x for x in self.l if x < 1 or self.k % x]
        if bad:
            raise ValueError(f"gcd classes {bad} do not divide the modulus {self.k}")
        object.__setattr__(self, "l", tuple(sorted(self.l)))

    @property
    def s(self) -> int:
        return len(self.l)


def _check_divides(k: int, *xs: int) -> None:
    if k < 1:
        raise ValueError(f"modulus must be positive, got {k}")
    for x in xs:
        if x < 1 or k % x:
            raise ValueError(f"{x} does not divide {k}")


def c_sum(k: int, l: int, d: int) -> int:
    """Sum of ``zeta**r`` over ``0 <= r < k`` with ``gcd(r, k) = l``, where
    ``zeta`` is a primitive ``d``-th root of unity."""
    _check_divides(k, l, d)
    e = d // gcd(d, l)
    q, rem = divmod(euler_phi(k // l), euler_phi(e))
    assert rem == 0, (k, l, d)
    return mobius(e) * q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_d, lowest degree first."""
    num = [-1] + [0] * (d - 1) + [1]  # x**d - 1
    for e in divisors(d)[:-1]:
        num = _exact_divide(num, cyclotomic_polynomial(e))
    return tuple(num)


def _exact_divide(num: list[int], den) -> list[int]:
    num = list(num)
    lead = den[-1]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c, rem = divmod(num[i + len(den) - 1], lead)
        assert rem == 0
        out[i] = c
        for j, dc in enumerate(den):
            num[i + j] -= c * dc
    assert not any(num), "non-exact polynomial division"
    return out


def _reduce_mod_monic(poly: list[int], modulus) -> list[int]:
    poly = list(poly)
    deg = len(modulus) - 1
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            for j, mc in enumerate(modulus):
                poly[i - deg + j] -= c * mc
    return poly[:deg]


def c_sum_bruteforce(k: int, l: int, d: int) -> int:
    """Evaluate the character sum by listing residues.

    The exponents ``r mod d`` are collected into an integer polynomial which
    is reduced modulo the ``d``-th cyclotomic polynomial; the remainder has
    to be a constant, and that constant is the sum.
    """
    _check_divides(k, l, d)
    counts = [0] * d
    for r in range(k):
        if gcd(r, k) == l:
            counts[r % d] += 1
    rem = _reduce_mod_monic(counts, cyclotomic_polynomial(d))
    if any(rem[1:]):
        raise ArithmeticError(f"character sum c({k},{l},{d}) is not rational: {rem}")
    return rem[0] if rem else 0


def count_residue_tuples(k: int, ls=()) -> int:
    """N(k; l_1, ..., l_s): tuples in (Z/k)^s with ``gcd(r_i, k) = l_i`` and
    zero sum, via ``(1/k) sum_{d|k} phi(d) prod_i c(k, l_i, d)``."""
    c = ResidueConstraint(k, tuple(ls))
    total = sum(euler_phi(d) * prod(c_sum(k, li, d) for li in c.l) for d in divisors(k))
    n, rem = divmod(total, k)
    assert rem == 0 and n >= 0, (k, c.l, total)
    return n


def count_residue_tuples_bruteforce(k: int, ls=()) -> int:
    c = ResidueConstraint(k, tuple(ls))
    if k**c.s > ENUMERATION_BUDGET:
        raise BudgetExceeded(f"{k}^{c.s} tuples exceed the enumeration budget")
    # gcd(0, k) == k, so r = 0 is the only residue in class k
    classes = [[r for r in range(k) if gcd(r, k) == li] for li in c.l]
    return sum(1 for rs in itertools.product(*classes) if sum(rs) % k == 0)


def prime_power_tuple_count(p: int, s: int) -> int:
    """Closed form ``((p-1)**s + (-1)**s (p-1)) / p`` for N(p; 1, ..., 1)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if s < 0:
        raise ValueError("s must be non-negative")
    n, rem = divmod((p - 1) ** s + (-1) ** s * (p - 1), p)
    assert rem == 0
    return n


def count_connected_monodromies(order: int, h: int, L: int, conventions: Conventions = DEFAULT) -> int:
    """Number of ``2h``-tuples in ``(Z/order)^(2h)`` whose gcd together with
    ``L`` is 1.

    ``L`` is the gcd of the branch-point classes and the order itself, so an
    unramified cover passes ``L = order``.
    """
    _check_divides(order, L)
    if h < 0:
        raise ValueError(f"base genus must be non-negative, got {h}")
    value = Fraction(order) ** (2 * h)
    for p in prime_divisors(L):
        if conventions.printed_monodromy_exponent:
            value *= 1 - Fraction(p) ** (2 * h)
        else:
            value *= 1 - Fraction(1, p ** (2 * h))
    if value.denominator != 1:
        raise ArithmeticError(f"monodromy count {value} is not an integer")
    return value.numerator


def count_connected_monodromies_bruteforce(order: int, h: int, L: int) -> int:
    _check_divides(order, L)
    if order ** (2 * h) > ENUMERATION_BUDGET:
        raise BudgetExceeded(f"{order}^{2 * h} tuples exceed the enumeration budget")
    count = 0
    for a in itertools.product(range(order), repeat=2 * h):
        g = L
        for x in a:
            g = gcd(g, x)
        count += g == 1
    return count
