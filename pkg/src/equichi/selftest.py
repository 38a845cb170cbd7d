"""Regression and oracle checks shared by ``equichi selftest`` and the test suite."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors, euler_phi, mobius
from .confspace import FiniteModel, equivariant_config_series, finite_model_oracle
from .conventions import DEFAULT, Conventions
from .cyclic import (
    count_connected_monodromies,
    count_connected_monodromies_bruteforce,
    count_residue_tuples,
    count_residue_tuples_bruteforce,
)
from .moduli import (
    SignatureError,
    UnstableError,
    enumerate_signatures,
    genus2_reference_table,
    mgn_series,
    orb_chi_moduli,
    signature_coefficient,
)
from .symfunc import PPolynomial, p_to_schur

# (k, l-list, value) for every residue-tuple count behind the genus-2 coefficients
GENUS2_N_VALUES = (
    (5, (1, 1, 1), 12),
    (10, (1, 2, 5), 4),
    (6, (1, 1, 2), 2),
    (3, (1, 1, 1, 1), 6),
    (6, (2, 2, 3, 3), 2),
    (2, (1, 1), 1),
    (8, (1, 1, 4), 4),
    (4, (1, 1, 2, 2), 2),
)

GENUS2_ORB_CHI = (((0, 3), Fraction(1)), ((0, 4), Fraction(-1)), ((0, 6), Fraction(-6)),
                  ((1, 2), Fraction(1, 12)), ((2, 0), Fraction(-1, 240)))


def standard_models() -> list[FiniteModel]:
    """Small permutation models: trivial groups, Z/2, Z/3 and S_3 on at most 5 points."""
    return [
        FiniteModel.generated_by(range(1), [], "point, trivial"),
        FiniteModel.generated_by(range(3), [], "3 points, trivial"),
        FiniteModel.generated_by(range(5), [], "5 points, trivial"),
        FiniteModel.generated_by(range(2), [(1, 0)], "Z/2 swapping 2 points"),
        FiniteModel.generated_by(range(3), [(1, 0, 2)], "Z/2 on 3 points, one fixed"),
        FiniteModel.generated_by(range(4), [(1, 0, 3, 2)], "Z/2 free on 4 points"),
        FiniteModel.generated_by(range(3), [(1, 2, 0)], "Z/3 rotating 3 points"),
        FiniteModel.generated_by(range(5), [(1, 2, 0, 4, 3)], "Z/6 generator: 3-cycle times swap"),
        FiniteModel.generated_by(range(4), [(1, 2, 0, 3)], "Z/3 on 4 points, one fixed"),
        FiniteModel.generated_by(range(3), [(1, 2, 0), (1, 0, 2)], "S_3 on 3 points"),
        FiniteModel.generated_by(range(5), [(1, 2, 0, 3, 4), (1, 0, 2, 4, 3)],
                                 "S_3 on 3 points plus sign on 2"),
    ]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"[{status}] {self.name} ({self.seconds:.2f}s){tail}"


class Mismatch(AssertionError):
    pass


def check_number_theory():
    for n in range(1, 2001):
        divs = divisors(n)
        if sum(mobius(d) for d in divs) != (n == 1):
            raise Mismatch(f"sum of mobius over divisors of {n}")
        if sum(euler_phi(d) for d in divs) != n:
            raise Mismatch(f"sum of phi over divisors of {n}")


def check_genus2_n_values():
    for k, ls, want in GENUS2_N_VALUES:
        closed = count_residue_tuples(k, ls)
        brute = count_residue_tuples_bruteforce(k, ls)
        if not closed == brute == want:
            raise Mismatch(f"N({k};{ls}): closed form {closed}, brute force {brute}, expected {want}")


def check_residue_sweep(max_k: int = 30, max_s: int = 4, budget: int = 10**6):
    for k in range(1, max_k + 1):
        divs = divisors(k)
        for s in range(max_s + 1):
            if k**s > budget:
                break
            for ls in itertools.combinations_with_replacement(divs, s):
                a = count_residue_tuples(k, ls)
                b = count_residue_tuples_bruteforce(k, ls)
                if a != b:
                    raise Mismatch(f"N({k};{ls}): closed form {a} != brute force {b}")


def check_monodromy_sweep(conventions: Conventions = DEFAULT, max_order: int = 8, max_h: int = 2):
    for order in range(1, max_order + 1):
        for h in range(max_h + 1):
            for L in divisors(order):
                a = count_connected_monodromies(order, h, L, conventions)
                b = count_connected_monodromies_bruteforce(order, h, L)
                if a != b:
                    raise Mismatch(
                        f"connected monodromies (ord={order}, h={h}, L={L}): "
                        f"closed form {a} != brute force {b}"
                    )


def check_orb_chi():
    for (h, s), want in GENUS2_ORB_CHI:
        got = orb_chi_moduli(h, s)
        if got != want:
            raise Mismatch(f"chi_orb(M_{h},{s}) = {got}, expected {want}")
    for h in range(6):
        for s in range(11):
            try:
                a = orb_chi_moduli(h, s)
            except UnstableError:
                continue
            if orb_chi_moduli(h, s + 1) != (2 - 2 * h - s) * a:
                raise Mismatch(f"puncture recursion fails at (h, s) = ({h}, {s})")


def check_genus2_table(conventions: Conventions = DEFAULT):
    reference = genus2_reference_table()
    found = set(enumerate_signatures(2))
    expected = {r.signature for r in reference}
    if found != expected:
        raise Mismatch(
            f"genus-2 signatures differ: extra {sorted(s.label() for s in found - expected)}, "
            f"missing {sorted(s.label() for s in expected - found)}"
        )
    for item, ref in enumerate(reference, 1):
        try:
            got = signature_coefficient(ref.signature, conventions)
        except (SignatureError, UnstableError, ValueError) as exc:
            raise Mismatch(f"genus-2 row {item}: {exc}") from exc
        fields = ("orb_chi", "monodromy_count", "n_value", "denominator", "coefficient")
        bad = [f for f in fields if getattr(got, f) != getattr(ref, f)]
        if bad:
            raise Mismatch(
                f"genus-2 row {item} diverges in {', '.join(bad)}; "
                f"computed {got.breakdown()}; expected {ref.breakdown()}"
            )


def check_config_series_models(max_n: int = 4):
    for model in standard_models():
        series = equivariant_config_series(model.group_action_data(), max_n)
        for n in range(max_n + 1):
            oracle = finite_model_oracle(model, n)
            if series[n] != oracle:
                raise Mismatch(f"{model.name}, n={n}: formula {series[n]} != oracle {oracle}")


def check_genus2_series(max_n: int = 10):
    series = mgn_series(2, max_n)
    if series[0] != PPolynomial.constant(1):
        raise Mismatch(f"t^0 coefficient is {series[0]}, expected 1")
    if series[1] != PPolynomial.p(1, 1, 2):
        raise Mismatch(f"t^1 coefficient is {series[1]}, expected 2*p1")
    for n in range(max_n + 1):
        for lam, m in p_to_schur(series[n], n).items():
            if m.denominator != 1:
                raise Mismatch(f"non-integral Schur multiplicity {m} at n={n}, lambda={lam}")


CHECKS = (
    ("number theory identities", check_number_theory, False),
    ("genus-2 N values", check_genus2_n_values, False),
    ("residue tuple oracle sweep", check_residue_sweep, False),
    ("connected monodromy oracle sweep", check_monodromy_sweep, True),
    ("orbifold Euler characteristics", check_orb_chi, False),
    ("genus-2 coefficient table", check_genus2_table, True),
    ("configuration series vs finite models", check_config_series_models, False),
    ("genus-2 series readout", check_genus2_series, False),
)


def run_selftest(conventions: Conventions = DEFAULT) -> list[CheckResult]:
    results = []
    for name, fn, takes_conventions in CHECKS:
        start = time.perf_counter()
        try:
            fn(conventions) if takes_conventions else fn()
        except Mismatch as exc:
            results.append(CheckResult(name, False, str(exc), time.perf_counter() - start))
        else:
            results.append(CheckResult(name, True, "", time.perf_counter() - start))
    return results
