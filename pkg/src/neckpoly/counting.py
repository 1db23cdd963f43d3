"""Counts of monic and irreducible polynomials as exact polynomials in q.

Two families are computed here, indexed by total degree d and number of
variables n:

  poly_count_polynomial  P with P(q) = number of monic total-degree-d
                         polynomials in n variables over F_q.  It is the
                         difference of the q-integers of C(n+d, n) and
                         C(n+d-1, n), i.e. the 0/1 polynomial supported on
                         degrees C(n+d-1, n) .. C(n+d, n) - 1.
  necklace_polynomial    M with M(q) = number of those that are
                         irreducible.  No closed formula is used: M_d is
                         read off from the Euler-product factorization of
                         the series sum_e P_e t^e, which determines it
                         uniquely.

Point values never go through the symbolic polynomials (whose degrees are
binomial coefficients and explode): the P series is specialized at the
point first and factorized in the smaller ring.  At 0, +1, -1 and at
prime-order roots of unity the specialized coefficients come from digit
residues (Lucas), so even parameters whose symbolic polynomials would have
astronomical degree evaluate in microseconds.  General integer points take
exact powers and are guarded by a configurable degree cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Tuple, Union

from .digits import binom_mod_p, to_digits
from .errors import InputError, ResourceError
from .exact import CycloElem, RatPoly, is_prime, multichoose, q_integer_at_root
from .series import Series, euler_factorize, euler_product

#: Polynomial degrees and power exponents above this are refused by default.
DEFAULT_MAX_DEGREE = 100_000


def _check_params(d: int, n: int):
    if n < 1:
        raise InputError(f"number of variables must be >= 1, got {n}")
    if d < 0:
        raise InputError(f"total degree must be >= 0, got {d}")


def poly_count_polynomial(d: int, n: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> RatPoly:
    """The polynomial counting monic total-degree-d polynomials in n variables.

    Equals x^lo + x^(lo+1) + ... + x^(hi-1) with lo = C(n+d-1, n) and
    hi = C(n+d, n); refuses (naming the degree) when hi exceeds the cap.
    """
    _check_params(d, n)
    hi = comb(n + d, n)
    lo = comb(n + d - 1, n)
    if hi > max_degree:
        raise ResourceError(
            f"monic-count polynomial for d={d}, n={n} needs degree {hi - 1}, "
            f"above the cap of {max_degree}"
        )
    return RatPoly((0,) * lo + (1,) * (hi - lo))


def _parity(m: int, n: int) -> int:
    # C(m, n) mod 2 through Lucas digits; avoids forming C(m, n).
    return binom_mod_p(to_digits(m, 2), to_digits(n, 2), 2)


def poly_count_value(d: int, n: int, at: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> Fraction:
    """P evaluated at an integer, without building the symbolic polynomial.

    0, +1 and -1 are handled by residues and multiset counts; other
    integers take exact powers with exponent C(n+d, n), guarded by the cap.
    """
    _check_params(d, n)
    if at == 0:
        return Fraction(1 if d == 0 else 0)
    if at == 1:
        return Fraction(multichoose(n, d))
    if at == -1:
        return Fraction(_parity(n + d, n) - _parity(n + d - 1, n))
    hi = comb(n + d, n)
    lo = comb(n + d - 1, n)
    if hi > max_degree:
        raise ResourceError(
            f"evaluating the monic count at {at} for d={d}, n={n} needs "
            f"exponent {hi}, above the cap of {max_degree}"
        )
    return Fraction(at ** hi - at ** lo, at - 1)


def poly_count_value_cyclo(d: int, n: int, p: int) -> CycloElem:
    """P evaluated at zeta_p purely through Lucas digit residues."""
    _check_params(d, n)
    if not is_prime(p):
        raise InputError(f"expected a prime order, got {p}")

    def qint_of_binom(m: int) -> CycloElem:
        residue = binom_mod_p(to_digits(m, p), to_digits(n, p), p)
        return q_integer_at_root(to_digits(residue, p), p)

    return qint_of_binom(n + d) - qint_of_binom(n + d - 1)


TableValue = Union[Fraction, RatPoly, CycloElem]


@dataclass(frozen=True)
class NecklaceTable:
    """Irreducible-count values for all degrees 1..max_degree at once.

    One factorization pass determines every degree, so bulk consumers
    (tables of Euler characteristics, verification grids) should hold one
    of these instead of re-inverting per degree.  provenance records
    whether entries are symbolic polynomials or specializations.
    """

    n: int
    max_degree: int
    provenance: str
    values: Tuple[TableValue, ...]  # index d-1 holds the degree-d value

    def __getitem__(self, d: int) -> TableValue:
        if not 1 <= d <= self.max_degree:
            raise InputError(
                f"table for n={self.n} covers degrees 1..{self.max_degree}, asked {d}"
            )
        return self.values[d - 1]


def _factorize_counts(coeffs, n: int, max_degree_table: int, provenance: str) -> NecklaceTable:
    exponents = euler_factorize(Series(coeffs))
    values = tuple(exponents[d] for d in range(1, max_degree_table + 1))
    return NecklaceTable(n, max_degree_table, provenance, values)


def necklace_table(n: int, up_to: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> NecklaceTable:
    """Symbolic table: entries are the irreducible-count polynomials."""
    _check_params(up_to, n)
    if up_to < 1:
        raise InputError("a table needs at least degree 1")
    coeffs = [poly_count_polynomial(e, n, max_degree=max_degree) for e in range(up_to + 1)]
    return _factorize_counts(coeffs, n, up_to, "symbolic")


def necklace_table_at(
    n: int, up_to: int, at: int, *, max_degree: int = DEFAULT_MAX_DEGREE
) -> NecklaceTable:
    """Specialized table: the count series is evaluated at an integer first."""
    _check_params(up_to, n)
    if up_to < 1:
        raise InputError("a table needs at least degree 1")
    coeffs = [poly_count_value(e, n, at, max_degree=max_degree) for e in range(up_to + 1)]
    return _factorize_counts(coeffs, n, up_to, f"specialized-at:{at}")


def necklace_table_cyclo(n: int, up_to: int, p: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> NecklaceTable:
    """Specialized table over Q(zeta_p), built from digit residues only."""
    _check_params(up_to, n)
    if up_to < 1:
        raise InputError("a table needs at least degree 1")
    if up_to > max_degree:
        raise ResourceError(
            f"series order {up_to} is above the cap of {max_degree}"
        )
    coeffs = [poly_count_value_cyclo(e, n, p) for e in range(up_to + 1)]
    return _factorize_counts(coeffs, n, up_to, f"specialized-at:zeta:{p}")


def necklace_polynomial(d: int, n: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> RatPoly:
    """The degree-d irreducible-count polynomial (symbolic path)."""
    _check_params(d, n)
    if d < 1:
        raise InputError(f"irreducible counts start at degree 1, got {d}")
    return necklace_table(n, d, max_degree=max_degree)[d]


def necklace_value(d: int, n: int, at: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> Fraction:
    """The degree-d irreducible count evaluated at an integer.

    Specialize-then-invert: exact in Q, never builds the symbolic
    polynomial, and free of guardrails at 0 and +-1.
    """
    _check_params(d, n)
    if d < 1:
        raise InputError(f"irreducible counts start at degree 1, got {d}")
    return necklace_table_at(n, d, at, max_degree=max_degree)[d]


def necklace_value_cyclo(d: int, n: int, p: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> CycloElem:
    """The degree-d irreducible count evaluated at zeta_p."""
    _check_params(d, n)
    if d < 1:
        raise InputError(f"irreducible counts start at degree 1, got {d}")
    return necklace_table_cyclo(n, d, p, max_degree=max_degree)[d]


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of the coefficientwise product-identity check in Q[x]."""

    n: int
    max_order: int
    passed: bool
    first_mismatch: Optional[Tuple[int, RatPoly, RatPoly]]

    def __str__(self):
        if self.passed:
            return (
                f"count series equals its Euler product for n={self.n} "
                f"up to t^{self.max_order}"
            )
        d, lhs, rhs = self.first_mismatch
        return f"mismatch at t^{d} for n={self.n}: series {lhs!r} vs product {rhs!r}"


def identity_check(n: int, up_to: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> IdentityReport:
    """Verify sum_e P_e t^e = prod_j (1/(1 - t^j))^(M_j) in Q[x], to t^up_to.

    The left side is built directly from the 0/1 support windows; the
    right side re-expands the factorization through the product code, so
    the two directions of the inversion check each other.
    """
    _check_params(up_to, n)
    coeffs = [poly_count_polynomial(e, n, max_degree=max_degree) for e in range(up_to + 1)]
    series = Series(coeffs)
    exponents = euler_factorize(series)
    product = euler_product(exponents, up_to)
    first = None
    for e in range(up_to + 1):
        if series.coefficient(e) != product.coefficient(e):
            first = (e, series.coefficient(e), product.coefficient(e))
            break
    return IdentityReport(n, up_to, first is None, first)
