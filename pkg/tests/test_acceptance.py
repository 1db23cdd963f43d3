"""Acceptance criteria, one test per criterion, all equalities exact.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
pass/fail lines and timings.  Every comparison is integer or rational
equality; the only tolerances are the wall-clock budgets, which are part
of the criteria themselves.
"""

import json
import random
import subprocess
import sys
from fractions import Fraction
from math import comb
from time import perf_counter

from neckpoly import (
    BaseField,
    CycloElem,
    Series,
    balanced_expansion,
    binom_mod_p,
    chi_irr,
    chi_irr_real_closed,
    count_irreducible,
    enumerate_monic,
    enumerate_partitions,
    euler_factorize,
    euler_product,
    identity_check,
    necklace_table_at,
    necklace_table_cyclo,
    p_complementary,
    partition_weight,
    poly_count_polynomial,
    poly_count_value,
    q_integer_at_root,
    q_product_check,
    q_series_coefficient,
    to_digits,
)
from neckpoly.fq import PrimeField


def _timed(num, description, limit_s, body):
    start = perf_counter()
    try:
        body()
    except BaseException:
        print(f"[acceptance {num}] FAIL  {description}")
        raise
    elapsed = perf_counter() - start
    print(f"[acceptance {num}] PASS  {description}  ({elapsed:.2f}s, budget {limit_s}s)")
    assert elapsed < limit_s, f"criterion {num} took {elapsed:.2f}s, budget {limit_s}s"


def test_acceptance_1_thirteen_variable_flagship():
    def body():
        proc = subprocess.run(
            [sys.executable, "-m", "neckpoly.cli", "euler-table",
             "--n", "13", "--dmax", "20", "--field", "real", "--format", "json"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        doc = json.loads(proc.stdout)
        rows = {int(r["d"]): int(r["chi_c"]) for r in doc["results"]["rows"]}
        expected = {1: -1, 2: 1, 4: -1, 16: 1}
        for d in range(1, 21):
            assert rows[d] == expected.get(d, 0), f"d={d}"
        # both routes ran: the table method records the double computation
        assert doc["results"]["method"] == "specialized+closed-form"

    _timed(1, "n=13 real table nonzero exactly at d=1,2,4,16", 1.0, body)


def test_acceptance_2_univariate_regression():
    def body():
        expected = [-1, 1] + [0] * 8
        for d in range(1, 11):
            assert chi_irr(d, 1, BaseField.REAL) == expected[d - 1]
            assert chi_irr_real_closed(d, 1) == expected[d - 1]

    _timed(2, "univariate real chi is (-1, 1, 0, ..., 0), both paths", 1.0, body)


def test_acceptance_3_oracle_equivalence():
    grid = (
        [(d, 1, 2) for d in range(1, 7)]
        + [(d, 2, 2) for d in range(1, 5)]
        + [(d, 3, 2) for d in range(1, 3)]
        + [(d, 1, 3) for d in range(1, 5)]
        + [(d, 2, 3) for d in range(1, 4)]
        + [(d, 1, 5) for d in range(1, 4)]
    )

    def body():
        table_cache = {}
        for d, n, q in grid:
            field = PrimeField(q)
            enumerated = sum(1 for _ in enumerate_monic(d, n, field))
            assert enumerated == poly_count_value(d, n, q), (d, n, q)
            if (n, q) not in table_cache:
                max_d = max(dd for dd, nn, qq in grid if (nn, qq) == (n, q))
                table_cache[(n, q)] = necklace_table_at(n, max_d, q)
            expected = table_cache[(n, q)][d]
            assert expected.denominator == 1
            assert count_irreducible(d, n, field) == int(expected), (d, n, q)

    _timed(3, f"enumeration oracle equals closed forms on {len(grid)} cells", 120.0, body)


def test_acceptance_4_higher_cyclotomic_identity():
    def body():
        for n, order in ((1, 6), (2, 6), (3, 4)):
            report = identity_check(n, order)
            assert report.passed, str(report)

    _timed(4, "count series equals its Euler product in Q[x]", 30.0, body)


def test_acceptance_5_root_of_unity_theorem():
    cases = [(2, n, 32) for n in (1, 2, 13, 55)] + [(3, n, 27) for n in (2, 6, 8, 24)]

    def body():
        for p, n, dmax in cases:
            expansion = balanced_expansion(n, p)
            assert expansion is not None
            table = necklace_table_cyclo(n, dmax, p)
            for d in range(1, dmax + 1):
                remaining, k = d, 0
                while remaining % p == 0:
                    remaining //= p
                    k += 1
                closed = expansion.coefficient(k) if remaining == 1 else 0
                assert table[d] == CycloElem.from_scalar(p, closed), (p, n, d)

    _timed(5, "values at zeta_p match balanced-expansion closed form", 60.0, body)


def test_acceptance_6_value_at_one():
    def body():
        for n in range(1, 7):
            table = necklace_table_at(n, 10, 1)
            assert table[1] == n
            for d in range(2, 11):
                assert table[d] == 0, (d, n)

    _timed(6, "value at 1 is n at degree 1 and 0 for degrees 2..10", 5.0, body)


def test_acceptance_7_q_series_analysis():
    cases = [(2, 3), (2, 13), (3, 6), (3, 8)]

    def body():
        for p, n in cases:
            for d in range(65):
                coeff = q_series_coefficient(d, n, p)
                assert coeff == (1 if p_complementary(d, n, p) else 0), (p, n, d)
                direct = q_integer_at_root(to_digits(comb(d + n, n), p), p)
                assert direct == CycloElem.from_scalar(p, coeff), (p, n, d)
            report = q_product_check(n, p, 64)
            assert report.passed, str(report)

    _timed(7, "Q(t) coefficients: Lucas = complementarity = direct; product ok", 10.0, body)


def test_acceptance_8_structural_invariants():
    def body():
        # 0/1 coefficients supported exactly on [C(n+d-1,n), C(n+d,n)-1]
        for n in range(1, 5):
            for d in range(7):
                poly = poly_count_polynomial(d, n)
                lo, hi = comb(n + d - 1, n), comb(n + d, n)
                assert all(poly[k] == 1 for k in range(lo, hi))
                assert all(poly[k] == 0 for k in range(lo))
                assert poly.degree == hi - 1

        # round trip and partition-sum equivalence on seeded random series
        rng = random.Random(13)
        for _ in range(20):
            coeffs = [Fraction(1)] + [
                Fraction(rng.randint(-8, 8), rng.randint(1, 6)) for _ in range(10)
            ]
            series = Series(coeffs)
            exponents = euler_factorize(series)
            assert euler_product(exponents, 10) == series
            for d in range(1, 11):
                total = Fraction(0)
                for part in enumerate_partitions(d):
                    total += partition_weight(exponents, part)
                assert total == coeffs[d]

        # Lucas vs direct residues, all m <= 500, k <= m (Pascal-row oracle)
        for p in (2, 3, 5):
            row = [1]
            for m in range(501):
                for k in range(m + 1):
                    assert binom_mod_p(to_digits(m, p), to_digits(k, p), p) == row[k]
                row = [1] + [(row[i] + row[i + 1]) % p for i in range(m)] + [1]

        # balanced-expansion existence criterion up to 10^4
        for base in (2, 3, 5):
            for n in range(1, 10_001):
                exists = balanced_expansion(n, base) is not None
                digits_ok = all(d in (0, base - 1) for d in to_digits(n, base))
                assert exists == digits_ok

    _timed(8, "support windows, round trips, Lucas, balanced existence", 60.0, body)
