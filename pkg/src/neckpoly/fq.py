"""Ground-truth enumeration of monic multivariate polynomials over F_q.

The orbit of a total-degree-d polynomial under nonzero scaling has a
unique representative whose leading coefficient under graded
lexicographic order (grade first, then x1 > x2 > ... > xn) is 1; those
representatives are what this module enumerates.  Graded lex is a
multiplicative monomial order, so products of representatives are again
representatives, which is what makes the reducibility sieve below sound:
every reducible total-degree-d monic polynomial is a product f*g of monic
polynomials with 1 <= deg f <= d/2, so subtracting the number of distinct
such products from the total count leaves exactly the irreducibles.

Everything is desk scale by design.  A work estimator runs before any
enumeration and refuses loudly, naming the predicted count, rather than
letting a parameter typo allocate for hours.

Canonical serialization used for test fixtures: each term is rendered
"c*x1^e1*x2^e2*...*xn^en" (every variable listed, zero exponents
included) and terms are joined with "+" in graded-lex descending order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product as cartesian_product
from time import perf_counter
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .counting import necklace_value, poly_count_value
from .errors import InputError, ResourceError
from .exact import is_prime

#: Enumerations and sieves whose predicted size exceeds this are refused.
DEFAULT_MAX_WORK = 10_000_000

Monomial = Tuple[int, ...]
Term = Tuple[Monomial, int]


class PrimeField:
    """Arithmetic modulo a small prime, with precomputed tables."""

    SUPPORTED = (2, 3, 5, 7)

    __slots__ = ("q", "add_table", "mul_table", "neg_table", "inv_table")

    def __init__(self, q: int):
        if q not in self.SUPPORTED:
            raise InputError(
                f"supported field sizes are {self.SUPPORTED}, got {q}"
            )
        self.q = q
        self.add_table = [[(a + b) % q for b in range(q)] for a in range(q)]
        self.mul_table = [[(a * b) % q for b in range(q)] for a in range(q)]
        self.neg_table = [(-a) % q for a in range(q)]
        self.inv_table = [0] + [pow(a, q - 2, q) for a in range(1, q)]

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"


def grlex_key(mono: Monomial) -> Tuple[int, Monomial]:
    """Sort key realizing graded lex with x1 > x2 > ... > xn."""
    return (sum(mono), mono)


def monomials_of_degree(degree: int, nvars: int) -> List[Monomial]:
    """All exponent tuples of total degree exactly `degree`, grlex descending."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        out.extend((e,) + rest for rest in monomials_of_degree(degree - e, nvars - 1))
    return out


def monomials_upto(degree: int, nvars: int) -> List[Monomial]:
    """All exponent tuples of total degree <= `degree`, grlex descending."""
    out: List[Monomial] = []
    for d in range(degree, -1, -1):
        out.extend(monomials_of_degree(d, nvars))
    return out


class FqMPoly:
    """Multivariate polynomial over F_q in canonical graded-lex form.

    terms is a tuple of (monomial, coefficient) pairs with nonzero
    coefficients, sorted leading term first; equal polynomials therefore
    have identical terms tuples, which double as dedup keys.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: PrimeField, nvars: int, terms: Iterable[Term]):
        if nvars < 1:
            raise InputError(f"need at least one variable, got {nvars}")
        collected: Dict[Monomial, int] = {}
        for mono, coeff in terms:
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise InputError(f"bad monomial {mono} for {nvars} variables")
            c = (collected.get(mono, 0) + coeff) % field.q
            if c:
                collected[mono] = c
            else:
                collected.pop(mono, None)
        self.field = field
        self.nvars = nvars
        self.terms = tuple(
            (mono, collected[mono])
            for mono in sorted(collected, key=grlex_key, reverse=True)
        )

    @classmethod
    def one(cls, field: PrimeField, nvars: int) -> FqMPoly:
        return cls(field, nvars, [((0,) * nvars, 1)])

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return sum(self.terms[0][0])

    @property
    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise InputError("the zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> int:
        if not self.terms:
            return 0
        return self.terms[0][1]

    def is_monic(self) -> bool:
        return bool(self.terms) and self.terms[0][1] == 1

    def __mul__(self, other):
        if not isinstance(other, FqMPoly):
            return NotImplemented
        return mpoly_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, FqMPoly):
            return NotImplemented
        return (
            self.field.q == other.field.q
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field.q, self.nvars, self.terms))

    def to_str(self) -> str:
        """Canonical fixture form: c*x1^e1*...*xn^en terms joined by +."""
        if not self.terms:
            return "0"
        rendered = []
        for mono, coeff in self.terms:
            factors = "*".join(f"x{i + 1}^{e}" for i, e in enumerate(mono))
            rendered.append(f"{coeff}*{factors}")
        return "+".join(rendered)

    def __repr__(self):
        return f"FqMPoly(q={self.field.q}, {self.to_str()})"


def mpoly_mul(f: FqMPoly, g: FqMPoly) -> FqMPoly:
    """Exact product; requires matching field and variable count."""
    if f.field.q != g.field.q or f.nvars != g.nvars:
        raise InputError(
            f"cannot multiply over F_{f.field.q} in {f.nvars} vars with "
            f"F_{g.field.q} in {g.nvars} vars"
        )
    field = f.field
    acc: Dict[Monomial, int] = {}
    for mono_f, cf in f.terms:
        for mono_g, cg in g.terms:
            mono = tuple(a + b for a, b in zip(mono_f, mono_g))
            c = (acc.get(mono, 0) + cf * cg) % field.q
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
    return FqMPoly(field, f.nvars, acc.items())


def predicted_count(d: int, n: int, q: int) -> int:
    """P(q): how many polynomials enumerate_monic(d, n, q) will yield."""
    value = poly_count_value(d, n, q)
    assert value.denominator == 1
    return int(value)


def enumerate_monic(
    d: int, n: int, field: PrimeField, *, max_work: int = DEFAULT_MAX_WORK
) -> Iterator[FqMPoly]:
    """Yield every monic total-degree-d polynomial in n variables, once.

    Stream order is deterministic: leading monomials in graded-lex
    descending order, and for each leading monomial the lower coefficient
    vectors in lexicographic order.
    """
    if d < 0:
        raise InputError(f"total degree must be >= 0, got {d}")
    total = predicted_count(d, n, field.q)
    if total > max_work:
        raise ResourceError(
            f"enumerating d={d}, n={n} over F_{field.q} would yield "
            f"{total} polynomials, above the cap of {max_work}"
        )
    monos = monomials_upto(d, n)
    leads = monomials_of_degree(d, n)  # the grade-d prefix of monos
    for idx, lead in enumerate(leads):
        lower = monos[idx + 1 :]
        for coeff_vec in cartesian_product(range(field.q), repeat=len(lower)):
            terms = [(lead, 1)]
            terms.extend(
                (mono, c) for mono, c in zip(lower, coeff_vec) if c
            )
            yield FqMPoly(field, n, terms)


def _sieve_pairs(
    factors_a: Sequence[FqMPoly],
    factors_b: Sequence[FqMPoly],
    same_degree: bool,
    start: int,
    stop: int,
) -> set:
    """Dedup keys of products f*g for f in factors_a[start:stop]."""
    keys = set()
    for ia in range(start, stop):
        f = factors_a[ia]
        # For equal split degrees the unordered pairs suffice.
        gs = factors_b[ia:] if same_degree else factors_b
        for g in gs:
            keys.add(mpoly_mul(f, g).terms)
    return keys


def _sieve_chunk(args) -> set:
    q, n, deg_a, deg_b, start, stop, max_work = args
    field = PrimeField(q)
    factors_a = list(enumerate_monic(deg_a, n, field, max_work=max_work))
    factors_b = (
        factors_a
        if deg_b == deg_a
        else list(enumerate_monic(deg_b, n, field, max_work=max_work))
    )
    return _sieve_pairs(factors_a, factors_b, deg_a == deg_b, start, stop)


def count_irreducible(
    d: int,
    n: int,
    field: PrimeField,
    *,
    max_work: int = DEFAULT_MAX_WORK,
    workers: int = 1,
) -> int:
    """Number of irreducible monic total-degree-d polynomials over F_q.

    Subtracts from the total count the number of distinct products of two
    monic factors whose lower degree is at most d/2.  With workers > 1 the
    product strata are split across processes; the merged dedup set, and
    hence the count, is identical for any worker count.
    """
    if d < 1:
        raise InputError(f"irreducibility needs total degree >= 1, got {d}")
    if n < 1:
        raise InputError(f"number of variables must be >= 1, got {n}")
    total = predicted_count(d, n, field.q)
    sieve_work = sum(
        predicted_count(i, n, field.q) * predicted_count(d - i, n, field.q)
        for i in range(1, d // 2 + 1)
    )
    if sieve_work > max_work:
        raise ResourceError(
            f"reducibility sieve for d={d}, n={n} over F_{field.q} needs "
            f"{sieve_work} products, above the cap of {max_work}"
        )
    product_keys: set = set()
    tasks = []
    for i in range(1, d // 2 + 1):
        count_a = predicted_count(i, n, field.q)
        if workers > 1:
            chunk = -(-count_a // workers)  # ceil division
            tasks.extend(
                (field.q, n, i, d - i, lo, min(lo + chunk, count_a), max_work)
                for lo in range(0, count_a, chunk)
            )
        else:
            tasks.append((field.q, n, i, d - i, 0, count_a, max_work))
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for keys in pool.map(_sieve_chunk, tasks):
                product_keys |= keys
    else:
        for task in tasks:
            product_keys |= _sieve_chunk(task)
    return total - len(product_keys)


@dataclass(frozen=True)
class GridCell:
    """Verification outcome for one (d, n, q) cell."""

    d: int
    n: int
    q: int
    enumerated: int
    predicted: int
    irreducible: int
    expected: int
    passed: bool
    seconds: float


@dataclass(frozen=True)
class GridReport:
    cells: Tuple[GridCell, ...]

    @property
    def passed(self) -> bool:
        return all(cell.passed for cell in self.cells)


def verify_grid(
    cells: Iterable[Tuple[int, int, int]],
    *,
    max_work: int = DEFAULT_MAX_WORK,
    workers: int = 1,
) -> GridReport:
    """Check enumeration totals and irreducible counts on (d, n, q) cells.

    Per cell, the enumerated stream is counted against the closed-form
    total, and the sieve count against the Euler-product inversion value;
    failures are recorded in the report rather than raised.
    """
    results = []
    for d, n, q in cells:
        if not is_prime(q):
            raise InputError(f"grid fields must be prime, got q={q}")
        field = PrimeField(q)
        start = perf_counter()
        enumerated = sum(1 for _ in enumerate_monic(d, n, field, max_work=max_work))
        predicted = predicted_count(d, n, q)
        irreducible = count_irreducible(d, n, field, max_work=max_work, workers=workers)
        expected_value = necklace_value(d, n, q)
        assert expected_value.denominator == 1
        expected = int(expected_value)
        elapsed = perf_counter() - start
        results.append(
            GridCell(
                d=d,
                n=n,
                q=q,
                enumerated=enumerated,
                predicted=predicted,
                irreducible=irreducible,
                expected=expected,
                passed=(enumerated == predicted and irreducible == expected),
                seconds=elapsed,
            )
        )
    return GridReport(tuple(results))
