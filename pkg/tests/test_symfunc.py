import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from equichi.symfunc import (
    HomogeneityError,
    Partition,
    PPolynomial,
    TruncatedSeries,
    binomial_power,
    hook_dimension,
    mn_character,
    p_to_schur,
    partitions_of,
    series_mul,
    specialize_plain_euler,
    specialize_quotient_euler,
    z_of,
)
from equichi.confspace import cycle_type

p = PPolynomial.p


def count_partitions(n, largest=None):
    # independent recursion on the largest part
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(count_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


def test_partitions_small():
    assert partitions_of(0) == [Partition()]
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(13))
def test_partition_counts(n):
    parts = partitions_of(n)
    assert len(parts) == count_partitions(n)
    assert len(set(parts)) == len(parts)
    assert all(p.weight == n and list(p) == sorted(p, reverse=True) for p in parts)
    assert count_partitions(10) == 42


def test_partition_normalizes():
    assert Partition([1, 3, 2]) == (3, 2, 1)
    assert Partition.from_exponents({"1": 2, "3": 1}) == (3, 1, 1)
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_z_of():
    assert z_of((1, 1, 1)) == 6
    assert z_of((2, 1)) == 2
    assert z_of(()) == 1


def test_z_of_counts_permutations():
    # n!/z_mu permutations of S_n have cycle type mu
    n = 8
    counts = {}
    for perm in itertools.permutations(range(n)):
        mu = cycle_type(perm)
        counts[mu] = counts.get(mu, 0) + 1
    assert z_of((3, 3, 2)) == factorial(8) // counts[(3, 3, 2)] == 36
    for mu, c in counts.items():
        assert c * z_of(mu) == factorial(n)


def test_series_identities():
    N = 4
    a = TruncatedSeries(N, [1, p(1)])
    b = TruncatedSeries(N, [1, -p(1)])
    assert series_mul(a, b) == TruncatedSeries(N, [1, 0, -p(1, 2)])
    x = binomial_power(3, -2, N) + binomial_power(1, 5, N)
    assert series_mul(TruncatedSeries.one(N), x) == x
    assert binomial_power(1, 3, N) == a * a * a


def test_series_order_mismatch():
    with pytest.raises(ValueError):
        series_mul(TruncatedSeries.one(2), TruncatedSeries.one(3))


def test_binomial_power_examples():
    assert binomial_power(4, 0, 5) == TruncatedSeries.one(5)
    assert binomial_power(1, -2, 3) == TruncatedSeries(3, [1, p(1, 1, -2), p(1, 2, 3), p(1, 3, -4)])
    assert binomial_power(2, -4, 4) == TruncatedSeries(4, [1, 0, p(2, 1, -4), 0, p(2, 2, 10)])


def test_binomial_power_inverse():
    for j in (1, 2, 3):
        for k in range(-6, 7):
            assert binomial_power(j, k, 9) * binomial_power(j, -k, 9) == TruncatedSeries.one(9)


def test_mn_character_examples():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((2, 1), (2, 1)) == 0
    assert mn_character((2, 1), (3,)) == -1
    with pytest.raises(ValueError):
        mn_character((2,), (1,))


@pytest.mark.parametrize("n", range(1, 9))
def test_character_orthogonality(n):
    parts = partitions_of(n)
    table = {(lam, mu): mn_character(lam, mu) for lam in parts for mu in parts}
    for lam in parts:
        for lam2 in parts:
            s = sum(Fraction(table[lam, mu] * table[lam2, mu], z_of(mu)) for mu in parts)
            assert s == (lam == lam2)
    for mu in parts:
        for nu in parts:
            s = sum(table[lam, mu] * table[lam, nu] for lam in parts)
            assert s == (z_of(mu) if mu == nu else 0)


@pytest.mark.parametrize("n", range(9))
def test_regular_representation(n):
    schur = p_to_schur(p(1, n) if n else PPolynomial.constant(1), n)
    assert schur == {lam: hook_dimension(lam) for lam in partitions_of(n)}
    assert sum(hook_dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_hook_dimension():
    assert hook_dimension((5,)) == 1
    assert hook_dimension((2, 1)) == 2
    assert hook_dimension((3, 2)) == 5


def test_single_power_sum_hits_hooks():
    n = 5
    schur = p_to_schur(p(n), n)
    for lam, m in schur.items():
        is_hook = len(lam) == 1 or lam[1] == 1
        assert m == ((-1) ** (len(lam) - 1) if is_hook else 0)


def test_h2_is_s2():
    h2 = (p(1, 2) + p(2)) * Fraction(1, 2)
    assert p_to_schur(h2, 2) == {(2,): 1, (1, 1): 0}
    assert specialize_quotient_euler(h2) == 1
    assert specialize_quotient_euler((p(1, 2) - p(2)) * Fraction(1, 2)) == 0
    assert specialize_quotient_euler(PPolynomial.constant(1)) == 1


def test_plain_euler():
    assert specialize_plain_euler(p(1, 4) * Fraction(7, 24), 4) == 7
    assert specialize_plain_euler(p(2), 2) == 0


def test_homogeneity_errors():
    f = p(1) + p(2)
    with pytest.raises(HomogeneityError):
        p_to_schur(f, 2)
    with pytest.raises(HomogeneityError):
        specialize_plain_euler(f, 1)


monomials = st.lists(st.integers(1, 4), max_size=4).map(Partition)
polys = st.dictionaries(monomials, st.fractions(max_denominator=50), max_size=5).map(PPolynomial)


@given(polys, polys, polys)
def test_polynomial_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert all(v != 0 for v in (a * b).terms.values())


@given(polys)
def test_polynomial_json_round_trip(a):
    assert PPolynomial.from_json(a.to_json()) == a


def test_term_order_is_graded_reverse_lex():
    f = p(1, 3) + p(3) + p(2) * p(1) + PPolynomial.constant(2) + p(1)
    assert [mu for mu, _ in f.sorted_terms()] == [(), (1,), (3,), (2, 1), (1, 1, 1)]
    assert str(f) == "2 + p1 + p3 + p1*p2 + p1^3"
