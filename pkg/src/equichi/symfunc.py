"""Symmetric functions in the power-sum basis.

A monomial ``p_1**e_1 * p_2**e_2 * ...`` is identified with the partition
that has ``e_j`` parts equal to ``j`` (its cycle type), so a
:class:`PPolynomial` is a map ``Partition -> Fraction``. Degree-n pieces are
read as Frobenius characteristics ``(1/n!) sum_sigma p_{type(sigma)} Tr(sigma)``.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .arith import as_rational, format_rational

__all__ = [
    "Partition",
    "PPolynomial",
    "TruncatedSeries",
    "HomogeneityError",
    "partitions_of",
    "z_of",
    "binomial_coefficient",
    "binomial_power",
    "series_mul",
    "mn_character",
    "p_to_schur",
    "hook_dimension",
    "specialize_plain_euler",
    "specialize_quotient_euler",
]


class HomogeneityError(ValueError):
    """A polynomial that should be homogeneous of some degree is not."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = sorted((int(x) for x in parts), reverse=True)
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_exponents(cls, exponents) -> "Partition":
        """Build from a map ``j -> multiplicity``."""
        parts = []
        for j, e in exponents.items():
            j, e = int(j), int(e)
            if j < 1 or e < 0:
                raise ValueError(f"bad exponent entry {j}: {e}")
            parts.extend([j] * e)
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self).items()))

    def __add__(self, other):
        # union of parts, i.e. the product of power-sum monomials
        return Partition(tuple.__add__(self, other))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


_EMPTY = Partition()


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (_EMPTY,)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """Partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions(n, n))


def z_of(mu) -> int:
    """Centralizer order ``prod_j j**m_j * m_j!`` of cycle type ``mu``."""
    return prod(j**m * factorial(m) for j, m in Counter(mu).items())


def _sort_key(mu: Partition):
    # graded, then reverse-lexicographic inside a degree
    return (mu.weight, tuple(-x for x in mu))


class PPolynomial:
    """Finite Q-linear combination of power-sum monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Partition, Fraction] = {}
        if terms:
            for mu, c in dict(terms).items():
                c = as_rational(c)
                if c:
                    mu = mu if isinstance(mu, Partition) else Partition(mu)
                    clean[mu] = clean.get(mu, 0) + c
                    if not clean[mu]:
                        del clean[mu]
        self.terms = clean

    @classmethod
    def constant(cls, c=1) -> "PPolynomial":
        return cls({_EMPTY: c})

    @classmethod
    def p(cls, j: int, e: int = 1, c=1) -> "PPolynomial":
        """``c * p_j**e``."""
        return cls({Partition([j] * e): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PPolynomial.constant(other)
        if not isinstance(other, PPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PPolynomial.constant(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            v = out.get(mu, 0) + c
            if v:
                out[mu] = v
            else:
                out.pop(mu, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return PPolynomial()
            return _raw({mu: c * other for mu, c in self.terms.items()})
        if not isinstance(other, PPolynomial):
            return NotImplemented
        out: dict[Partition, Fraction] = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                key = mu + nu
                out[key] = out.get(key, 0) + a * b
        return _raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def coefficient(self, mu) -> Fraction:
        return self.terms.get(Partition(mu), Fraction(0))

    def degrees(self) -> set[int]:
        return {mu.weight for mu in self.terms}

    def is_homogeneous(self, n: int) -> bool:
        return all(mu.weight == n for mu in self.terms)

    def check_homogeneous(self, n: int) -> None:
        bad = sorted(mu.weight for mu in self.terms if mu.weight != n)
        if bad:
            raise HomogeneityError(f"expected degree {n}, found monomials of degree {bad}")

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def evaluate(self, values) -> Fraction:
        """Substitute ``p_j -> values(j)``."""
        return sum(
            (c * prod(as_rational(values(j)) for j in mu) for mu, c in self.terms.items()),
            Fraction(0),
        )

    def to_json(self) -> list[dict]:
        return [
            {"exponents": {str(j): e for j, e in mu.multiplicities().items()},
             "coefficient": format_rational(c)}
            for mu, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data) -> "PPolynomial":
        return cls({Partition.from_exponents(t["exponents"]): t["coefficient"] for t in data})

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mu, c in self.sorted_terms():
            mono = "*".join(
                f"p{j}" if e == 1 else f"p{j}^{e}" for j, e in mu.multiplicities().items()
            )
            if not mono:
                pieces.append(format_rational(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{format_rational(c)}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"PPolynomial({self})"


def _raw(terms) -> PPolynomial:
    # caller guarantees Partition keys and nonzero Fraction values
    out = PPolynomial.__new__(PPolynomial)
    out.terms = terms
    return out


class TruncatedSeries:
    """Power series in ``t`` with PPolynomial coefficients, kept up to ``t**order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.order = order
        coeffs = list(coeffs or [])
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        coeffs += [PPolynomial() for _ in range(order + 1 - len(coeffs))]
        self.coeffs = [c if isinstance(c, PPolynomial) else PPolynomial.constant(c) for c in coeffs]

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [PPolynomial.constant(1)])

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order)

    def __getitem__(self, n: int) -> PPolynomial:
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c) -> "TruncatedSeries":
        c = as_rational(c)
        return TruncatedSeries(self.order, [a * c for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def check_graded(self) -> None:
        """Every ``t**n`` coefficient must be homogeneous of degree ``n``."""
        for n, c in enumerate(self.coeffs):
            c.check_homogeneous(n)

    def to_json(self) -> list[dict]:
        return [{"n": n, "terms": c.to_json()} for n, c in enumerate(self.coeffs)]

    def __repr__(self):
        body = " + ".join(f"({c})*t^{n}" for n, c in enumerate(self.coeffs) if c)
        return f"TruncatedSeries(order={self.order}: {body or '0'})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    N = a.order
    out = [PPolynomial() for _ in range(N + 1)]
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(N + 1 - i):
            y = b.coeffs[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return TruncatedSeries(N, out)


def binomial_coefficient(k: int, m: int) -> int:
    """Generalized ``C(k, m)`` for any integer ``k``."""
    value = Fraction(prod(k - i for i in range(m)), factorial(m))
    assert value.denominator == 1
    return value.numerator


def binomial_power(j: int, k: int, order: int) -> TruncatedSeries:
    """``(1 + p_j t**j)**k`` truncated at ``t**order``; ``k`` may be negative."""
    if j < 1:
        raise ValueError("power-sum index must be positive")
    coeffs = [PPolynomial() for _ in range(order + 1)]
    m = 0
    while j * m <= order:
        c = binomial_coefficient(k, m)
        if k >= 0 and m > k:
            break
        coeffs[j * m] = PPolynomial.p(j, m, c)
        m += 1
    return TruncatedSeries(order, coeffs)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # rim hook removal = sliding one bead; sign from beads jumped over
        height = sum(1 for x in beta if target < x < b)
        new_beta = sorted((target if x == b else x for x in beta), reverse=True)
        new_lam = tuple(
            p for p in (new_beta[i] - (length - 1 - i) for i in range(length)) if p
        )
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def mn_character(lam, mu) -> int:
    """Irreducible character value chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"|{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(mu))


def hook_dimension(lam) -> int:
    """Number of standard Young tableaux of shape ``lam``."""
    lam = Partition(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(lam.weight) // hooks


def p_to_schur(f: PPolynomial, n: int) -> dict[Partition, Fraction]:
    """Schur coefficients of a degree-``n`` symmetric function, one per
    ``lam`` of ``n`` (zeros included), via ``p_mu = sum_lam chi^lam(mu) s_lam``."""
    f.check_homogeneous(n)
    return {
        lam: sum((c * mn_character(lam, mu) for mu, c in f.terms.items()), Fraction(0))
        for lam in partitions_of(n)
    }


def specialize_plain_euler(f: PPolynomial, n: int) -> Fraction:
    """Total dimension: ``n!`` times the coefficient of ``p_1**n``."""
    f.check_homogeneous(n)
    direct = factorial(n) * f.coefficient([1] * n)
    via_schur = sum(
        (m * hook_dimension(lam) for lam, m in p_to_schur(f, n).items()), Fraction(0)
    )
    assert direct == via_schur, (direct, via_schur)
    return direct


def specialize_quotient_euler(f: PPolynomial) -> Fraction:
    """Set every ``p_j = 1``; for a Frobenius characteristic this is the
    multiplicity of the trivial representation."""
    value = f.evaluate(lambda j: 1)
    degrees = f.degrees()
    if len(degrees) == 1:
        (n,) = degrees
        assert p_to_schur(f, n)[Partition([n] if n else [])] == value
    return value
