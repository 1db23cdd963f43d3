"""Base-b digit arithmetic: balanced expansions, Lucas residues, Q(t).

Digit vectors are plain lists of ints, least significant digit first, with
no trailing zeros (so the empty list is 0 and representations are unique).
Keeping everything digitwise means residues of binomial coefficients are
available without ever forming the binomial coefficients themselves.

A balanced base-b expansion writes n as an alternating sum

    n = b^(k_{2m}) - b^(k_{2m-1}) + ... + b^(k_1) - b^(k_0)

with strictly increasing exponents, an even number of terms, and the
largest exponent carrying +.  Such an expansion exists exactly when every
base-b digit of n is 0 or b-1, and it is then unique; the constructor
below builds it by expanding each digit (b-1)*b^k as b^(k+1) - b^k and
cancelling the pairs that meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from .errors import DomainError, InputError, VerificationError
from .exact import CycloElem, is_prime, q_integer_at_root
from .series import Series, euler_product


def to_digits(n: int, base: int) -> List[int]:
    """Canonical base-b digits of n >= 0, least significant first."""
    if base < 2:
        raise InputError(f"base must be >= 2, got {base}")
    if n < 0:
        raise InputError(f"cannot take digits of a negative integer {n}")
    digits = []
    while n:
        n, r = divmod(n, base)
        digits.append(r)
    return digits


def from_digits(digits, base: int) -> int:
    """Inverse of to_digits."""
    value = 0
    for d in reversed(list(digits)):
        value = value * base + d
    return value


@dataclass(frozen=True)
class BalancedExpansion:
    """Alternating-sign expansion in powers of a base.

    exponents is strictly increasing with even length; ascending index i
    carries sign -1 for even i and +1 for odd i, so the largest exponent
    is always positive and the reconstructed value is positive.
    """

    base: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) % 2 != 0:
            raise InputError("balanced expansions have an even number of terms")
        if any(a >= b for a, b in zip(self.exponents, self.exponents[1:])):
            raise InputError("balanced exponents must strictly increase")

    def sign(self, index: int) -> int:
        return 1 if index % 2 else -1

    def coefficient(self, k: int) -> int:
        """The coefficient of base^k: one of -1, 0, +1."""
        for i, e in enumerate(self.exponents):
            if e == k:
                return self.sign(i)
        return 0

    def value(self) -> int:
        return sum(self.sign(i) * self.base ** e for i, e in enumerate(self.exponents))

    def __str__(self):
        terms = [
            f"{'+' if self.sign(i) > 0 else '-'}{self.base}^{e}"
            for i, e in reversed(list(enumerate(self.exponents)))
        ]
        return " ".join(terms)


def balanced_expansion(n: int, base: int) -> Optional[BalancedExpansion]:
    """The balanced base-b expansion of n, or None when none exists.

    Absence is an ordinary value: callers branch on it.
    """
    if n < 1:
        raise InputError(f"balanced expansions are defined for n >= 1, got {n}")
    digits = to_digits(n, base)
    if any(d not in (0, base - 1) for d in digits):
        return None
    coeff = {}
    for k, d in enumerate(digits):
        if d == 0:
            continue
        # (b-1)*b^k = b^(k+1) - b^k; adjacent nonzero digits cancel in pairs.
        coeff[k + 1] = coeff.get(k + 1, 0) + 1
        coeff[k] = coeff.get(k, 0) - 1
    exponents = tuple(sorted(k for k, c in coeff.items() if c != 0))
    expansion = BalancedExpansion(base, exponents)
    if expansion.value() != n:  # construction is exact; guards future edits
        raise VerificationError(f"balanced expansion of {n} reconstructed wrongly")
    return expansion


def balanced_coefficient(n: int, base: int, k: int) -> int:
    """Coefficient of base^k in the balanced expansion of n."""
    expansion = balanced_expansion(n, base)
    if expansion is None:
        raise DomainError(f"{n} has no balanced base-{base} expansion")
    return expansion.coefficient(k)


def binom_mod_p(m_digits, n_digits, p: int) -> int:
    """C(m, n) mod p from the base-p digit lists of m and n (Lucas).

    The residue is the product of the digitwise binomial coefficients,
    with the shorter digit list padded by zeros.
    """
    if not is_prime(p):
        raise InputError(f"Lucas reduction needs a prime modulus, got {p}")
    m_digits = list(m_digits)
    n_digits = list(n_digits)
    for d in m_digits + n_digits:
        if not 0 <= d < p:
            raise InputError(f"invalid base-{p} digit {d!r}")
    result = 1
    for i in range(max(len(m_digits), len(n_digits))):
        a = m_digits[i] if i < len(m_digits) else 0
        b = n_digits[i] if i < len(n_digits) else 0
        result = result * comb(a, b) % p
        if result == 0:
            return 0
    return result


def p_complementary(d: int, n: int, p: int) -> bool:
    """True when no base-p position is nonzero in both d and n."""
    if d < 0 or n < 0:
        raise InputError("p-complementarity is defined for naturals")
    if not is_prime(p):
        raise InputError(f"expected a prime base, got {p}")
    a = to_digits(d, p)
    b = to_digits(n, p)
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def q_series_coefficient(d: int, n: int, p: int) -> int:
    """Coefficient of t^d in Q(t) = sum_d [C(d+n, n)]_{zeta_p} t^d.

    Defined for n with a balanced base-p expansion, where every
    coefficient is 0 or 1: it is 1 exactly when d is p-complementary
    to n.  Computed through the Lucas residue of C(d+n, n) and its
    q-integer value at zeta_p, not through the complementarity shortcut,
    so the two characterizations can be checked against each other.
    """
    if balanced_expansion(n, p) is None:
        raise DomainError(f"{n} has no balanced base-{p} expansion")
    residue = binom_mod_p(to_digits(d + n, p), to_digits(n, p), p)
    value = q_integer_at_root(to_digits(residue, p), p)
    if value == CycloElem.zero(p):
        return 0
    if value == CycloElem.one(p):
        return 1
    raise VerificationError(
        f"[C({d}+{n},{n})]_zeta_{p} = {value!r} is not 0 or 1 despite balanced n"
    )


@dataclass(frozen=True)
class QProductReport:
    """Outcome of the (1 - t) Q(t) product-formula check."""

    n: int
    prime: int
    max_order: int
    passed: bool
    first_mismatch: Optional[Tuple[int, int, int]]  # (degree, lhs, rhs)

    def __str__(self):
        if self.passed:
            return (
                f"(1 - t)*Q(t) product formula holds for n={self.n}, "
                f"p={self.prime} up to t^{self.max_order}"
            )
        d, lhs, rhs = self.first_mismatch
        return (
            f"mismatch at t^{d} for n={self.n}, p={self.prime}: "
            f"direct {lhs} vs product {rhs}"
        )


def q_product_check(n: int, p: int, max_order: int) -> QProductReport:
    """Compare (1 - t) Q(t) against the balanced-exponent Euler product.

    Left side: Q(t) coefficients via Lucas digit arithmetic, times (1 - t).
    Right side: prod_k (1/(1 - t^(p^k)))^(c_k) over the balanced
    coefficients c_k of n (the k = 0 factor included).  Both sides are
    integer series and are compared coefficientwise up to t^max_order.
    """
    expansion = balanced_expansion(n, p)
    if expansion is None:
        raise DomainError(f"{n} has no balanced base-{p} expansion")
    q_series = Series([q_series_coefficient(d, n, p) for d in range(max_order + 1)])
    one_minus_t = Series([1, -1] + [0] * (max_order - 1)) if max_order >= 1 else Series([1])
    lhs = one_minus_t * q_series
    exponents = {
        p ** e: expansion.coefficient(e) for e in expansion.exponents
    }
    rhs = euler_product(exponents, max_order)
    first = None
    for d in range(max_order + 1):
        if lhs.coefficient(d) != rhs.coefficient(d):
            first = (d, lhs.coefficient(d), rhs.coefficient(d))
            break
    return QProductReport(n, p, max_order, first is None, first)
