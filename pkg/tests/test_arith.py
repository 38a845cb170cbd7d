from fractions import Fraction
from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from equichi.arith import (
    bernoulli,
    divisors,
    euler_phi,
    factorize,
    format_rational,
    mobius,
    parse_rational,
)


@pytest.mark.parametrize("n, expected", [(1, ()), (12, ((2, 2), (3, 1))), (97, ((97, 1),))])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_reconstructs(n):
    f = factorize(n)
    primes = [p for p, _ in f]
    assert primes == sorted(set(primes))
    assert prod(p**e for p, e in f) == n
    assert all(len(factorize(p)) == 1 and factorize(p)[0] == (p, 1) for p in primes)


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


@pytest.mark.parametrize("n, expected", [(1, 1), (5, -1), (12, 0), (30, -1), (6, 1)])
def test_mobius(n, expected):
    assert mobius(n) == expected


@pytest.mark.parametrize("n", [1, 5, 10, 36, 97])
def test_euler_phi_against_enumeration(n):
    assert euler_phi(n) == sum(1 for r in range(1, n + 1) if gcd(r, n) == 1)


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(5) ** 3 == 64
    assert euler_phi(10) == 4


@pytest.mark.parametrize("n, expected", [(1, [1]), (6, [1, 2, 3, 6]), (10, [1, 2, 5, 10])])
def test_divisors(n, expected):
    assert divisors(n) == expected


def test_divisor_sums_up_to_ten_thousand():
    for n in range(1, 10_001):
        divs = divisors(n)
        assert sum(mobius(d) for d in divs) == (1 if n == 1 else 0)
        assert sum(euler_phi(d) for d in divs) == n


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_rejects_odd():
    with pytest.raises(ValueError):
        bernoulli(3)
    with pytest.raises(ValueError):
        bernoulli(-2)


def test_bernoulli_zeta_relation():
    # zeta(2) = pi^2/6 = (-1)^(m+1) B_2m (2 pi)^2m / (2 (2m)!)
    import math
    for m in (1, 2, 3):
        zeta = sum(1 / k ** (2 * m) for k in range(1, 200_000))
        approx = (-1) ** (m + 1) * float(bernoulli(2 * m)) * (2 * math.pi) ** (2 * m) / (2 * math.factorial(2 * m))
        assert abs(zeta - approx) < 1e-5


fractions = st.fractions(max_denominator=10**6)


@given(fractions, fractions, fractions)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    for x in (a + b, a * b, a - c):
        assert x.denominator > 0
        assert gcd(x.numerator, x.denominator) == 1


@given(fractions)
def test_rational_string_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_parse_rejects_floats():
    with pytest.raises(ValueError):
        parse_rational("0.5")
