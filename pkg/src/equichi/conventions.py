"""Switches for formula variants that differ from the corrected defaults.

The defaults are what the library computes. The ``printed_*`` variants
swap in three plausible but wrong formulas; they exist only so the
self-test can demonstrate that each of them breaks the genus-2 regression.
Nothing outside ``selftest`` should use them.
"""
from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Conventions:
    #: count tuples with ``prod (1 - p**(2h))`` instead of ``prod (1 - p**(-2h))``
    printed_monodromy_exponent: bool = False
    #: quotient genus ``(1 - sum k_j) / 2`` instead of ``(2 - sum k_j) / 2``
    printed_quotient_genus: bool = False
    #: ``(-1)**s (2g-1) B_{2g} / (2g-3)!`` instead of the Harer-Zagier value
    printed_orbifold_chi: bool = False

    def flipped(self, **changes) -> "Conventions":
        return replace(self, **changes)

    @property
    def is_default(self) -> bool:
        return self == DEFAULT


DEFAULT = Conventions()

VARIANTS = {
    "monodromy-exponent": "printed_monodromy_exponent",
    "quotient-genus": "printed_quotient_genus",
    "orbifold-chi": "printed_orbifold_chi",
}
