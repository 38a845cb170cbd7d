"""Equivariant Euler characteristics of configuration spaces F(X, n)/G.

``equivariant_config_series`` turns per-element orbit-length data into the
generating series ``sum_n t**n ch_n(F(X,n)/G)``; ``strata_combine`` sums
weighted products of ``(1 + p_j t**j)**k_j`` (the fibred version, also the
backend of the moduli series). ``finite_model_oracle`` recomputes the same
coefficients for a finite G-set by listing tuples and orbits.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .arith import as_rational, format_rational
from .symfunc import Partition, PPolynomial, TruncatedSeries, binomial_power

__all__ = [
    "ElementData",
    "GroupActionData",
    "Stratum",
    "FiniteModel",
    "SchemaError",
    "equivariant_config_series",
    "strata_combine",
    "finite_model_oracle",
    "falling_factorial_check",
    "cycle_type",
]

ORACLE_BUDGET = 10**6


class SchemaError(ValueError):
    """Input data does not follow the documented JSON layout."""


@dataclass(frozen=True)
class ElementData:
    label: str
    chi_by_orbit_length: dict[int, int]


@dataclass
class GroupActionData:
    """Fixed-point data of a finite group acting on a space X.

    ``elements`` lists every group element once, with ``chi(X_k(g))`` for
    each orbit length ``k`` (missing lengths mean 0).
    """

    group_order: int
    elements: list[ElementData] = field(default_factory=list)

    def __post_init__(self):
        if self.group_order < 1:
            raise SchemaError("group_order must be positive")
        if len(self.elements) != self.group_order:
            raise SchemaError(
                f"group_order is {self.group_order} but {len(self.elements)} elements were given"
            )
        totals = {sum(e.chi_by_orbit_length.values()) for e in self.elements}
        if len(totals) > 1:
            raise SchemaError(f"elements disagree on chi(X): {sorted(totals)}")

    @property
    def chi(self) -> int:
        return sum(self.elements[0].chi_by_orbit_length.values())

    @classmethod
    def from_json(cls, data) -> "GroupActionData":
        try:
            order = data["group_order"]
            elements = [
                ElementData(
                    str(e.get("label", i)),
                    {int(k): int(v) for k, v in e["chi_by_orbit_length"].items()},
                )
                for i, e in enumerate(data["elements"])
            ]
        except (KeyError, TypeError, AttributeError, ValueError) as exc:
            raise SchemaError(f"malformed group action data: {exc}") from exc
        if not isinstance(order, int):
            raise SchemaError("group_order must be an integer")
        for e in elements:
            if any(k < 1 for k in e.chi_by_orbit_length):
                raise SchemaError(f"orbit lengths must be positive in element {e.label!r}")
        return cls(order, elements)

    def to_json(self) -> dict:
        return {
            "group_order": self.group_order,
            "elements": [
                {"label": e.label,
                 "chi_by_orbit_length": {str(k): v for k, v in sorted(e.chi_by_orbit_length.items())}}
                for e in self.elements
            ],
        }


@dataclass(frozen=True)
class Stratum:
    weight: Fraction
    exponents: dict[int, int]

    @classmethod
    def from_json(cls, data) -> "Stratum":
        try:
            weight = as_rational(data["weight"])
            exponents = {int(j): int(k) for j, k in data["exponents"].items()}
        except (KeyError, TypeError, AttributeError, ValueError) as exc:
            raise SchemaError(f"malformed stratum: {exc}") from exc
        if any(j < 1 for j in exponents):
            raise SchemaError("stratum exponent indices must be positive")
        return cls(weight, exponents)

    def to_json(self) -> dict:
        return {
            "weight": format_rational(self.weight),
            "exponents": {str(j): k for j, k in sorted(self.exponents.items())},
        }


def _product_of_powers(exponents, order: int) -> TruncatedSeries:
    series = TruncatedSeries.one(order)
    for j, k in sorted(exponents.items()):
        if k:
            series = series * binomial_power(j, k, order)
    return series


def equivariant_config_series(data: GroupActionData, order: int) -> TruncatedSeries:
    """``(1/|G|) sum_g prod_k (1 + p_k t**k)**(chi(X_k(g)) / k)``."""
    total = TruncatedSeries.zero(order)
    for e in data.elements:
        exps = {}
        for k, chi in e.chi_by_orbit_length.items():
            if chi % k:
                raise ValueError(
                    f"element {e.label!r}: chi(X_{k}) = {chi} is not divisible by the orbit length {k}"
                )
            exps[k] = chi // k
        total = total + _product_of_powers(exps, order)
    return total.scale(Fraction(1, data.group_order))


def strata_combine(strata, order: int) -> TruncatedSeries:
    """``sum weight * prod_j (1 + p_j t**j)**k_j`` over the strata, in list order."""
    total = TruncatedSeries.zero(order)
    for st in strata:
        total = total + _product_of_powers(st.exponents, order).scale(st.weight)
    return total


def cycle_type(perm) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            n = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            lengths.append(n)
    return Partition(lengths)


def _compose(a, b):
    # (a . b)(x) = a(b(x))
    return tuple(a[x] for x in b)


class FiniteModel:
    """A finite group acting on a finite set by permutations.

    ``elements`` are permutations of ``range(len(points))`` given as image
    tuples; the set must be closed under composition and contain the identity.
    """

    def __init__(self, points, elements, name: str = ""):
        self.points = list(points)
        self.name = name
        size = len(self.points)
        perms = []
        for g in elements:
            g = tuple(g)
            if sorted(g) != list(range(size)):
                raise ValueError(f"{g} is not a permutation of {size} points")
            if g not in perms:
                perms.append(g)
        identity = tuple(range(size))
        if identity not in perms:
            raise ValueError("group elements must include the identity")
        group = set(perms)
        for a in perms:
            for b in perms:
                if _compose(a, b) not in group:
                    raise ValueError(f"elements are not closed under composition: {a} * {b}")
        self.elements = perms
        self.identity = identity

    @classmethod
    def generated_by(cls, points, generators, name: str = "") -> "FiniteModel":
        size = len(points)
        group = {tuple(range(size))}
        frontier = list(group)
        gens = [tuple(g) for g in generators]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = _compose(g, a)
                    if c not in group:
                        group.add(c)
                        nxt.append(c)
            frontier = nxt
        return cls(points, sorted(group), name)

    @property
    def order(self) -> int:
        return len(self.elements)

    def group_action_data(self) -> GroupActionData:
        """Count the points lying in orbits of each length, per element."""
        elements = []
        for g in self.elements:
            chi: dict[int, int] = {}
            for length in cycle_type(g):
                chi[length] = chi.get(length, 0) + length
            elements.append(ElementData(str(g), chi))
        return GroupActionData(self.order, elements)


def finite_model_oracle(model: FiniteModel, n: int) -> PPolynomial:
    """Frobenius characteristic of the permutation representation of S_n on
    the orbit set F(X, n)/G, by listing injective tuples and their G-orbits."""
    size = len(model.points)
    if n < 0:
        raise ValueError("n must be non-negative")
    if size**n > ORACLE_BUDGET:
        raise ValueError(f"{size}^{n} tuples exceed the oracle budget")
    orbit_of: dict[tuple, tuple] = {}
    for y in itertools.permutations(range(size), n):
        if y in orbit_of:
            continue
        orbit = frozenset(tuple(g[x] for x in y) for g in model.elements)
        rep = min(orbit)
        for z in orbit:
            orbit_of[z] = rep
    reps = sorted(set(orbit_of.values()))
    counts: dict[Partition, int] = {}
    for sigma in itertools.permutations(range(n)):
        fixed = 0
        for y in reps:
            moved = tuple(y[sigma[i]] for i in range(n))
            fixed += orbit_of[moved] == y
        mu = cycle_type(sigma)
        counts[mu] = counts.get(mu, 0) + fixed
    return PPolynomial({mu: Fraction(c, factorial(n)) for mu, c in counts.items()})


def falling_factorial_check(chi: int, n: int) -> Fraction:
    """``chi (chi-1) ... (chi-n+1)``, the Euler characteristic of F(X, n),
    cross-checked against ``n! [t**n] (1 + t)**chi``."""
    value = 1
    for i in range(n):
        value *= chi - i
    coeff = binomial_power(1, chi, n)[n].evaluate(lambda j: 1)
    assert factorial(n) * coeff == value, (chi, n)
    return Fraction(value)


def oracle_series(model: FiniteModel, order: int) -> TruncatedSeries:
    return TruncatedSeries(order, [finite_model_oracle(model, n) for n in range(order + 1)])

