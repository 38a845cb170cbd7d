"""Exact S_n-equivariant Euler characteristics of the moduli spaces M_{g,n}, g >= 2."""

__version__ = "0.1.0"

from .arith import bernoulli, divisors, euler_phi, factorize, mobius
from .confspace import (
    FiniteModel,
    GroupActionData,
    Stratum,
    equivariant_config_series,
    finite_model_oracle,
    strata_combine,
)
from .cyclic import c_sum, count_connected_monodromies, count_residue_tuples
from .moduli import (
    Signature,
    enumerate_signatures,
    genus_coefficients,
    mgn_series,
    orb_chi_moduli,
    signature_coefficient,
)
from .symfunc import Partition, PPolynomial, TruncatedSeries, p_to_schur, partitions_of
