"""Exact scalar algebra: rational polynomials, cyclotomic elements, binomials.

Everything here is exact.  Integers are Python ints (arbitrary precision),
rationals are fractions.Fraction (always reduced, denominator positive),
and the two compound carriers are:

  RatPoly    dense univariate polynomial over Q.  coeffs[k] is the
             coefficient of x^k; the trailing coefficient is nonzero and
             the empty tuple is the zero polynomial, so equal polynomials
             have identical representations.
  CycloElem  element of Q(zeta_p) for a prime p, written in the power
             basis (1, zeta, ..., zeta^(p-2)) of Q[x]/Phi_p(x).  Elements
             are eagerly reduced via zeta^(p-1) = -(1 + zeta + ... +
             zeta^(p-2)), so equality is coordinatewise.

Fraction, RatPoly and CycloElem (and plain ints, which coerce into any of
them) all form binomial rings: they are closed under the multiset
coefficient a(a+1)...(a+m-1)/m! computed by multichoose().  The generic
series code in the series module relies only on +, -, *, equality,
coercion of small ints, and exact division by an integer, all of which
the three carriers provide.

Values are immutable once constructed and every operation returns a new
value, so everything in this package can be shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Union

from .errors import InputError

#: Anything accepted as a binomial-ring value by the generic operations.
RingValue = Union[int, Fraction, "RatPoly", "CycloElem"]


def is_prime(n: int) -> bool:
    """Trial-division primality test; intended for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def binomial(m: int, k: int) -> int:
    """Exact C(m, k) for naturals; 0 when k > m."""
    if m < 0 or k < 0:
        raise InputError(f"binomial expects naturals, got ({m}, {k})")
    return comb(m, k)


def one_like(a: RingValue) -> RingValue:
    """The multiplicative identity of the ring that a lives in."""
    return a * 0 + 1


def multichoose(a: RingValue, m: int) -> RingValue:
    """The multiset coefficient a(a+1)(a+2)...(a+m-1) / m!.

    For a natural number a this counts multisets: it equals
    binomial(a + m - 1, m).  The same product formula is evaluated in
    whatever binomial ring a belongs to (int, Fraction, RatPoly,
    CycloElem), and the division by m! is always exact there.
    """
    if m < 0:
        raise InputError(f"multichoose order must be >= 0, got {m}")
    if isinstance(a, int):
        if a >= 0:
            return comb(a + m - 1, m) if m else 1
        num = 1
        for i in range(m):
            num *= a + i
        return num // factorial(m)  # m consecutive integers, division exact
    acc = one_like(a)
    for i in range(m):
        acc = acc * (a + i)
    return acc / factorial(m)


class RatPoly:
    """Dense univariate polynomial over Q in canonical form."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> RatPoly:
        return cls()

    @classmethod
    def one(cls) -> RatPoly:
        return cls((1,))

    @classmethod
    def x(cls) -> RatPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> RatPoly:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if scalar == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        inv = Fraction(1, 1) / scalar
        return RatPoly(tuple(c * inv for c in self.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            raise InputError("polynomial powers must be >= 0")
        result = RatPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, point: RingValue) -> RingValue:
        """Horner evaluation in any ring the coefficients coerce into."""
        acc = point * 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("RatPoly", self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "RatPoly(0)"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                var = "x" if k == 1 else f"x^{k}"
                term = var if c == 1 else f"-{var}" if c == -1 else f"{c}*{var}"
            parts.append(term)
        body = " + ".join(parts).replace("+ -", "- ")
        return f"RatPoly({body})"


def ratpoly_eval(f: RatPoly, point: RingValue) -> RingValue:
    """Evaluate f at a point of any binomial-ring carrier (Horner form)."""
    return f(point)


def q_integer(m: int) -> RatPoly:
    """The polynomial 1 + x + ... + x^(m-1); zero for m = 0."""
    if m < 0:
        raise InputError(f"q_integer expects m >= 0, got {m}")
    return RatPoly((1,) * m)


class CycloElem:
    """Element of Q(zeta_p), p prime, reduced into the power basis."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords):
        if not is_prime(p):
            raise InputError(f"cyclotomic order must be prime, got {p}")
        coords = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coords)
        if len(coords) != p - 1:
            raise InputError(
                f"need {p - 1} coordinates for Q(zeta_{p}), got {len(coords)}"
            )
        self.p = p
        self.coords = coords

    @classmethod
    def from_scalar(cls, p: int, value) -> CycloElem:
        return cls(p, (value,) + (0,) * (p - 2))

    @classmethod
    def zero(cls, p: int) -> CycloElem:
        return cls.from_scalar(p, 0)

    @classmethod
    def one(cls, p: int) -> CycloElem:
        return cls.from_scalar(p, 1)

    @classmethod
    def zeta(cls, p: int) -> CycloElem:
        """A primitive p-th root of unity (zeta_2 reduces to -1)."""
        if p == 2:
            return cls(2, (-1,))
        return cls(p, (0, 1) + (0,) * (p - 3))

    @classmethod
    def _reduce(cls, p: int, vec) -> CycloElem:
        # vec holds coefficients of 1, zeta, ..., zeta^(len-1) with len < 2p - 1;
        # fold zeta^e = zeta^(e mod p), then eliminate zeta^(p-1).
        folded = [Fraction(0)] * p
        for e, c in enumerate(vec):
            folded[e % p] += c
        top = folded[p - 1]
        return cls(p, tuple(folded[i] - top for i in range(p - 1)))

    def _check_same_field(self, other: CycloElem):
        if self.p != other.p:
            raise InputError(
                f"mixed cyclotomic orders: zeta_{self.p} vs zeta_{other.p}"
            )

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            self._check_same_field(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.from_scalar(self.p, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloElem(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.p, tuple(-c for c in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = self.p - 1
        out = [Fraction(0)] * (2 * n - 1 if n > 1 else 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                out[i + j] += a * b
        return CycloElem._reduce(self.p, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if scalar == 0:
            raise ZeroDivisionError("division of cyclotomic element by zero scalar")
        inv = Fraction(1, 1) / scalar
        return CycloElem(self.p, tuple(c * inv for c in self.coords))

    def __pow__(self, n: int):
        if n < 0:
            raise InputError("cyclotomic powers must be >= 0")
        result = CycloElem.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def __eq__(self, other):
        if isinstance(other, CycloElem) and other.p != self.p:
            return False
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(("CycloElem", self.p, self.coords))

    def __repr__(self):
        return f"CycloElem(p={self.p}, coords={self.coords})"


def q_integer_at_root(m_digits, p: int) -> CycloElem:
    """Evaluate 1 + x + ... + x^(m-1) at zeta_p from base-p digits of m.

    Only m mod p matters, and for base-p digits that is the least
    significant digit, so m itself is never materialized; digit lists of
    astronomically large m are fine.
    """
    if not is_prime(p):
        raise InputError(f"expected a prime base, got {p}")
    digits = list(m_digits)
    if digits and digits[-1] == 0:
        raise InputError("digit list has trailing zeros (not canonical)")
    for d in digits:
        if not isinstance(d, int) or not 0 <= d < p:
            raise InputError(f"invalid base-{p} digit {d!r}")
    residue = digits[0] if digits else 0
    # [r]_zeta = 1 + zeta + ... + zeta^(r-1) with r <= p - 1: already in basis.
    coords = [1] * residue + [0] * (p - 1 - residue)
    return CycloElem(p, coords)


def cyclo_arith(a: CycloElem, b: CycloElem, op: str) -> CycloElem:
    """Functional form of CycloElem arithmetic: op is "add" or "mul"."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise InputError(f"unknown cyclotomic operation {op!r}")
