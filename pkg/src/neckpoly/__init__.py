"""Exact arithmetic for necklace polynomials and their specializations.

The package computes, with no floating point anywhere:

  * the polynomials counting monic and irreducible multivariate
    polynomials over finite fields (counting),
  * their exact values at integers and prime-order roots of unity
    (counting, exact),
  * balanced base-b expansions and Lucas digit arithmetic (digits),
  * compactly supported Euler characteristics of the spaces of real and
    complex irreducible polynomials (euler),
  * and a brute-force finite-field enumeration oracle that re-derives the
    small-scale counts from scratch (fq).

The cli module exposes all of it as scriptable commands.
"""

from .errors import DomainError, InputError, ResourceError, VerificationError
from .exact import (
    CycloElem,
    RatPoly,
    binomial,
    cyclo_arith,
    multichoose,
    q_integer,
    q_integer_at_root,
    ratpoly_eval,
)
from .series import (
    Partition,
    Series,
    enumerate_partitions,
    euler_factorize,
    euler_product,
    geometric_pow,
    partition_weight,
    series_mul,
)
from .digits import (
    BalancedExpansion,
    balanced_coefficient,
    balanced_expansion,
    binom_mod_p,
    from_digits,
    p_complementary,
    q_product_check,
    q_series_coefficient,
    to_digits,
)
from .counting import (
    NecklaceTable,
    identity_check,
    necklace_polynomial,
    necklace_table,
    necklace_table_at,
    necklace_table_cyclo,
    necklace_value,
    necklace_value_cyclo,
    poly_count_polynomial,
    poly_count_value,
    poly_count_value_cyclo,
)
from .fq import (
    FqMPoly,
    PrimeField,
    count_irreducible,
    enumerate_monic,
    mpoly_mul,
    verify_grid,
)
from .euler import BaseField, EulerTable, chi_irr, chi_irr_real_closed, chi_poly, euler_table

__version__ = "0.1.0"

__all__ = [
    "BalancedExpansion",
    "BaseField",
    "CycloElem",
    "DomainError",
    "EulerTable",
    "FqMPoly",
    "InputError",
    "NecklaceTable",
    "Partition",
    "PrimeField",
    "RatPoly",
    "ResourceError",
    "Series",
    "VerificationError",
    "balanced_coefficient",
    "balanced_expansion",
    "binom_mod_p",
    "binomial",
    "chi_irr",
    "chi_irr_real_closed",
    "chi_poly",
    "count_irreducible",
    "cyclo_arith",
    "enumerate_monic",
    "enumerate_partitions",
    "euler_factorize",
    "euler_product",
    "euler_table",
    "from_digits",
    "geometric_pow",
    "identity_check",
    "mpoly_mul",
    "multichoose",
    "necklace_polynomial",
    "necklace_table",
    "necklace_table_at",
    "necklace_table_cyclo",
    "necklace_value",
    "necklace_value_cyclo",
    "p_complementary",
    "partition_weight",
    "poly_count_polynomial",
    "poly_count_value",
    "poly_count_value_cyclo",
    "q_integer",
    "q_integer_at_root",
    "q_product_check",
    "q_series_coefficient",
    "ratpoly_eval",
    "series_mul",
    "to_digits",
    "verify_grid",
]
