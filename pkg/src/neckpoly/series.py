"""Truncated power series over a binomial ring and Euler-product inversion.

A Series stores exact coefficients of t^0 .. t^order.  The carrier ring is
whatever the coefficients are (int, Fraction, RatPoly, CycloElem); the code
only uses ring operations plus multichoose, so any binomial ring works.

The central pair of operations:

  euler_product(b, order)    expand  prod_j (1/(1 - t^j))^b_j
  euler_factorize(a)         recover the unique exponents b_j from a
                             unital series a, by determining b_j as the
                             current t^j coefficient and dividing the
                             factor back out (multiplying by the geometric
                             factor with exponent -b_j)

These are mutually inverse on series with constant coefficient 1.  The
equivalent partition-sum expansion (coefficient of t^d equals the sum over
partitions of d of the products of multichoose values) is provided through
enumerate_partitions and partition_weight; it is kept as an independent
cross-check, not as the production path, because partition counts grow
super-polynomially while the divide-out recurrence costs O(order^2) ring
operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping

from .errors import InputError
from .exact import RingValue, multichoose, one_like


class Series:
    """Truncated series; coeffs[k] is the exact coefficient of t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RingValue]):
        cs = tuple(coeffs)
        if not cs:
            raise InputError("a truncated series needs at least the t^0 coefficient")
        self.coeffs = cs

    @classmethod
    def one(cls, order: int, like: RingValue = 1) -> Series:
        """The series 1 + 0t + ... + 0t^order in the ring of `like`."""
        one = one_like(like)
        zero = like * 0
        return cls((one,) + (zero,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> RingValue:
        return self.coeffs[k]

    def truncate(self, order: int) -> Series:
        if order >= self.order:
            return self
        return Series(self.coeffs[: order + 1])

    def __mul__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        out: List[RingValue] = []
        for k in range(order + 1):
            acc = self.coeffs[0] * other.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return Series(out)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Series", self.coeffs))

    def __repr__(self):
        return f"Series({list(self.coeffs)!r})"


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to the smaller of the two orders."""
    return a * b


def geometric_pow(j: int, exponent: RingValue, order: int) -> Series:
    """(1/(1 - t^j))^exponent truncated at the given order.

    Expands to sum_m multichoose(exponent, m) t^(j*m); the exponent may be
    any binomial-ring value, not just a natural number.
    """
    if j < 1:
        raise InputError(f"geometric factor index must be >= 1, got {j}")
    zero = exponent * 0
    coeffs: List[RingValue] = [zero] * (order + 1)
    for m in range(order // j + 1):
        coeffs[j * m] = multichoose(exponent, m)
    return Series(coeffs)


def euler_product(exponents: Mapping[int, RingValue], order: int) -> Series:
    """Expand prod_j (1/(1 - t^j))^b_j truncated at the given order.

    Factors with j > order contribute nothing below t^(order+1) and are
    skipped; absent j means exponent zero.
    """
    sample = next(iter(exponents.values()), 1)
    result = Series.one(order, like=sample)
    for j in sorted(exponents):
        if j > order:
            continue
        b = exponents[j]
        if b == b * 0:
            continue
        result = result * geometric_pow(j, b, order)
    return result


def euler_factorize(a: Series) -> Dict[int, RingValue]:
    """Invert euler_product: the unique b_1..b_order with matching expansion.

    Requires the constant coefficient to be the ring's 1.  Works degree by
    degree: once factors for indices < j are divided out, the remaining
    series is 1 + b_j t^j + ..., so b_j can be read off directly and its
    geometric factor removed by multiplying with the exponent negated.
    """
    one = one_like(a.coeffs[0])
    if a.coeffs[0] != one:
        raise InputError("series must have constant coefficient 1 to factorize")
    order = a.order
    remaining = a
    out: Dict[int, RingValue] = {}
    for j in range(1, order + 1):
        b = remaining.coeffs[j]
        out[j] = b
        if b != b * 0:
            remaining = remaining * geometric_pow(j, -b, order)
    return out


@dataclass(frozen=True)
class Partition:
    """Integer partition as a weakly decreasing tuple of positive parts."""

    parts: tuple

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise InputError("partition parts must be >= 1")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InputError("partition parts must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        """Map part size j to the number of parts of that size."""
        mult: Dict[int, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return mult


def enumerate_partitions(d: int) -> List[Partition]:
    """All partitions of d, ordered by decreasing largest part, then lex."""
    if d < 0:
        raise InputError(f"cannot partition a negative integer {d}")

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(parts) for parts in gen(d, d)]


def partition_weight(exponents: Mapping[int, RingValue], part: Partition) -> RingValue:
    """prod_j multichoose(b_j, m_j) over the part sizes j of the partition."""
    acc: RingValue = 1
    for j, m in sorted(part.multiplicities().items()):
        if j not in exponents:
            raise InputError(f"no exponent provided for part size {j}")
        acc = multichoose(exponents[j], m) * acc
    return acc
