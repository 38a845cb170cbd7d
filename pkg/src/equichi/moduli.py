"""Generating series of S_n-equivariant Euler characteristics of M_{g,n}.

A cyclic automorphism ``tau`` of order ``ord`` on a genus-``g`` curve is
recorded by its *signature*: integers ``k_j`` (``j | ord``) with
``chi(C_j(tau)) = j * k_j``. The quotient ``C/tau`` has genus ``h`` with
``2 - 2h = sum_j k_j`` and ``s = sum_{j<ord} k_j`` branch points. Each
signature contributes ``c * prod_j (1 + p_j t**j)**k_j`` where

    c = chi_orb(M_{h,s}) * #connected monodromies * N(ord; l) / (prod_{j<ord} k_j! * ord).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, prod

from .arith import bernoulli, divisors, format_rational
from .confspace import Stratum, strata_combine
from .conventions import DEFAULT, Conventions
from .cyclic import count_connected_monodromies, count_residue_tuples
from .symfunc import TruncatedSeries

__all__ = [
    "UnstableError",
    "SignatureError",
    "Signature",
    "CoefficientRecord",
    "orb_chi_moduli",
    "enumerate_signatures",
    "signature_coefficient",
    "genus_coefficients",
    "mgn_series",
    "genus2_reference_table",
    "general_g_closed_forms",
    "REFERENCE_GENUS2",
]


class UnstableError(ValueError):
    """(h, s) is not a stable pair, so M_{h,s} has no orbifold Euler characteristic here."""


class SignatureError(ArithmeticError):
    """A signature yields inconsistent quotient data."""


def orb_chi_moduli(h: int, s: int) -> Fraction:
    """Orbifold Euler characteristic of M_{h,s} (Harer-Zagier)."""
    if h < 0 or s < 0:
        raise UnstableError(f"(h, s) = ({h}, {s}) has a negative entry")
    if (h == 0 and s < 3) or (h == 1 and s < 1):
        raise UnstableError(f"(h, s) = ({h}, {s}) is unstable")
    if h == 0:
        return Fraction((-1) ** (s - 3) * factorial(s - 3))
    return (
        (-1) ** s
        * factorial(2 * h - 3 + s)
        * (2 * h - 1)
        * bernoulli(2 * h)
        / factorial(2 * h)
    )


def _printed_orb_chi(g: int, s: int) -> Fraction:
    # typeset variant, kept only for the self-test's negative controls
    return (-1) ** s * (2 * g - 1) * bernoulli(2 * g) / factorial(2 * g - 3)


@dataclass(frozen=True, order=True)
class Signature:
    """Type of a cyclic automorphism: genus, order, and ``k_j`` for ``j | order``.

    ``k`` holds ``(j, k_j)`` pairs for every divisor ``j`` of the order,
    ascending in ``j`` (zeros included).
    """

    g: int
    order: int
    k: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, g: int, order: int, k) -> "Signature":
        k = dict(k)
        extra = [j for j, v in k.items() if v and order % j]
        if extra:
            raise SignatureError(f"k_j nonzero for j = {extra} not dividing {order}")
        return cls(g, order, tuple((j, int(k.get(j, 0))) for j in divisors(order)))

    @property
    def kmap(self) -> dict[int, int]:
        return dict(self.k)

    @property
    def exponents(self) -> dict[int, int]:
        return {j: v for j, v in self.k if v}

    @property
    def k_top(self) -> int:
        return self.k[-1][1]

    @property
    def s(self) -> int:
        return sum(v for j, v in self.k if j < self.order)

    @property
    def l(self) -> tuple[int, ...]:
        return tuple(j for j, v in self.k if j < self.order for _ in range(v))

    @property
    def euler_sum(self) -> int:
        return sum(j * v for j, v in self.k)

    def quotient_genus(self, conventions: Conventions = DEFAULT) -> int:
        total = sum(v for _, v in self.k)
        if conventions.printed_quotient_genus:
            h = Fraction(1 - total, 2)
        else:
            h = Fraction(2 - total, 2)
        if h.denominator != 1 or h < 0:
            raise SignatureError(
                f"{self.label()}: quotient genus {format_rational(h)} is not a non-negative integer"
            )
        return h.numerator

    @property
    def h(self) -> int:
        return self.quotient_genus()

    @property
    def branch_gcd(self) -> int:
        """gcd of the branch classes and the order (the order itself when unramified)."""
        out = self.order
        for j in self.l:
            out = gcd(out, j)
        return out

    def sort_key(self):
        return (self.order, tuple(-v for _, v in self.k[:-1]))

    def label(self) -> str:
        ks = ",".join(f"k{j}={v}" for j, v in self.k if v)
        return f"ord={self.order}: {ks}"

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "order": self.order,
            "k": {str(j): v for j, v in self.k if v},
            "h": self.h,
            "s": self.s,
            "l": list(self.l),
        }


@dataclass(frozen=True)
class CoefficientRecord:
    signature: Signature
    coefficient: Fraction
    orb_chi: Fraction
    monodromy_count: int
    n_value: int
    denominator: int  # prod_{j<ord} k_j! * ord

    def __post_init__(self):
        assert self.coefficient == (
            self.orb_chi * self.monodromy_count * self.n_value / self.denominator
        )

    def breakdown(self) -> str:
        return (
            f"{self.signature.label()}: chi_orb={format_rational(self.orb_chi)}, "
            f"monodromies={self.monodromy_count}, N={self.n_value}, "
            f"denominator={self.denominator}, coefficient={format_rational(self.coefficient)}"
        )

    def stratum(self) -> Stratum:
        return Stratum(self.coefficient, self.signature.exponents)

    def to_json(self) -> dict:
        return {
            "signature": self.signature.to_json(),
            "coefficient": format_rational(self.coefficient),
            "breakdown": {
                "orb_chi": format_rational(self.orb_chi),
                "monodromy_count": self.monodromy_count,
                "n_value": self.n_value,
                "denominator": self.denominator,
            },
        }

    def latex(self) -> str:
        c = self.coefficient
        sign = "-" if c < 0 else "+"
        c = abs(c)
        head = str(c.numerator) if c.denominator == 1 else rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
        factors = []
        for j, k in sorted(self.signature.exponents.items()):
            t = "t" if j == 1 else f"t^{{{j}}}"
            f = f"(1+p_{{{j}}}{t})"
            factors.append(f if k == 1 else f"{f}^{{{k}}}")
        return f"{sign}{head}" + "".join(factors)


def signature_coefficient(sig: Signature, conventions: Conventions = DEFAULT) -> CoefficientRecord:
    if sig.euler_sum != 2 - 2 * sig.g:
        raise SignatureError(f"{sig.label()}: sum j*k_j = {sig.euler_sum} != {2 - 2 * sig.g}")
    h = sig.quotient_genus(conventions)
    s = sig.s
    if conventions.printed_orbifold_chi:
        chi = _printed_orb_chi(sig.g, s)
    else:
        chi = orb_chi_moduli(h, s)
    mono = count_connected_monodromies(sig.order, h, sig.branch_gcd, conventions)
    nval = count_residue_tuples(sig.order, sig.l)
    den = prod(factorial(v) for j, v in sig.k if j < sig.order) * sig.order
    return CoefficientRecord(sig, chi * mono * nval / den, chi, mono, nval, den)


def _k_vectors(js, budget_weights, budget):
    """Non-negative vectors with ``sum k_j * w_j <= budget`` (all ``w_j > 0``)."""
    if not js:
        yield ()
        return
    w = budget_weights[0]
    for v in range(budget // w + 1):
        for rest in _k_vectors(js[1:], budget_weights[1:], budget - v * w):
            yield (v,) + rest


@lru_cache(maxsize=None)
def _enumerate(g: int) -> tuple[Signature, ...]:
    out = []
    for order in range(1, 4 * g + 3):
        js = divisors(order)[:-1]
        # h >= 0 means sum_{j<ord} k_j (ord - j) <= 2 ord - 2 + 2g
        weights = [order - j for j in js]
        for ks in _k_vectors(js, weights, 2 * order - 2 + 2 * g):
            rest = 2 - 2 * g - sum(j * v for j, v in zip(js, ks))
            if rest % order:
                continue
            k_top = rest // order
            total = sum(ks) + k_top
            if total % 2 or total > 2:
                continue
            h = (2 - total) // 2
            s = sum(ks)
            if (h == 0 and s < 3) or (h == 1 and s < 1):
                continue
            sig = Signature.make(g, order, dict(zip(js, ks)) | {order: k_top})
            if count_residue_tuples(order, sig.l) == 0:
                continue
            if count_connected_monodromies(order, h, sig.branch_gcd) == 0:
                continue
            out.append(sig)
    out.sort(key=Signature.sort_key)
    return tuple(out)


def enumerate_signatures(g: int) -> list[Signature]:
    """All cyclic-automorphism signatures of genus ``g`` with nonzero contribution,
    ordered by (order, k vector descending). Orders run up to ``4g + 2``."""
    if g < 2:
        raise ValueError("genus must be at least 2 (automorphism groups must be finite)")
    return list(_enumerate(g))


def genus_coefficients(g: int, conventions: Conventions = DEFAULT) -> list[CoefficientRecord]:
    return [signature_coefficient(sig, conventions) for sig in enumerate_signatures(g)]


def mgn_series(g: int, order: int) -> TruncatedSeries:
    """``sum_n t**n ch(M_{g,n})`` truncated at ``t**order``."""
    records = genus_coefficients(g)
    return strata_combine([r.stratum() for r in records], order)


# Genus-2 summands: (row, order, k map, coefficient, chi_orb, N).
REFERENCE_GENUS2 = (
    (1, 1, {1: -2}, Fraction(-1, 240), Fraction(-1, 240), 1),
    (2, 2, {1: 6, 2: -4}, Fraction(-1, 240), Fraction(-6), 1),
    (3, 5, {1: 3, 5: -1}, Fraction(2, 5), Fraction(1), 12),
    (4, 10, {1: 1, 2: 1, 5: 1, 10: -1}, Fraction(2, 5), Fraction(1), 4),
    (5, 6, {1: 2, 2: 1, 6: -1}, Fraction(1, 6), Fraction(1), 2),
    (6, 3, {1: 4, 3: -2}, Fraction(-1, 12), Fraction(-1), 6),
    (7, 6, {2: 2, 3: 2, 6: -2}, Fraction(-1, 12), Fraction(-1), 2),
    (8, 2, {1: 2, 2: -2}, Fraction(1, 12), Fraction(1, 12), 1),
    (9, 8, {1: 2, 4: 1, 8: -1}, Fraction(1, 4), Fraction(1), 4),
    (10, 4, {1: 2, 2: 2, 4: -2}, Fraction(-1, 8), Fraction(-1), 2),
)


def genus2_reference_table() -> list[CoefficientRecord]:
    """The ten genus-2 summands as hard-coded regression records."""
    out = []
    for item, order, k, coeff, chi, nval in REFERENCE_GENUS2:
        sig = Signature.make(2, order, k)
        mono = 4 if item == 8 else 1
        den = prod(factorial(v) for j, v in k.items() if j < order) * order
        out.append(CoefficientRecord(sig, coeff, chi, mono, nval, den))
    return out


def general_g_closed_forms(g: int) -> tuple[Stratum, Stratum]:
    """Identity summand ``chi_orb(M_{g,0}) (1+p_1 t)**(2-2g)`` and hyperelliptic
    summand ``-1/(4g(2g+1)(2g+2)) (1+p_1 t)**(2g+2) (1+p_2 t**2)**(-2g)``.

    Both are checked against the general enumeration.
    """
    identity = Stratum(orb_chi_moduli(g, 0), {1: 2 - 2 * g})
    hyper = Stratum(Fraction(-1, 4 * g * (2 * g + 1) * (2 * g + 2)), {1: 2 * g + 2, 2: -2 * g})
    found = {(tuple(sorted(r.signature.exponents.items())), r.coefficient) for r in genus_coefficients(g)}
    for st in (identity, hyper):
        key = (tuple(sorted(st.exponents.items())), st.weight)
        assert key in found, f"closed form {st} missing from the genus-{g} enumeration"
    return identity, hyper
