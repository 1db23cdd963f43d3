"""Tests for exact scalar algebra: binomials, polynomials, cyclotomic elements."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from neckpoly import (
    CycloElem,
    InputError,
    RatPoly,
    binomial,
    cyclo_arith,
    multichoose,
    q_integer,
    q_integer_at_root,
    ratpoly_eval,
    to_digits,
)


def pascal_binomial(m, k):
    """Independent oracle: Pascal's recurrence, no product formula."""
    row = [1]
    for _ in range(m):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k] if k <= m else 0


class TestBinomial:
    def test_k_zero_is_one(self):
        for m in range(10):
            assert binomial(m, 0) == 1

    def test_small_value(self):
        assert binomial(4, 2) == 6

    def test_large_value_against_pascal(self):
        assert binomial(29, 13) == pascal_binomial(29, 13) == 67863915

    def test_k_beyond_m_is_zero(self):
        assert binomial(5, 9) == 0

    def test_negative_rejected(self):
        with pytest.raises(InputError):
            binomial(-1, 2)


class TestMultichoose:
    def test_order_zero_is_one(self):
        assert multichoose(7, 0) == 1
        assert multichoose(Fraction(3, 2), 0) == 1
        assert multichoose(RatPoly.x(), 0) == RatPoly.one()

    def test_natural_values(self):
        assert multichoose(3, 2) == 6

    def test_matches_binomial_on_naturals(self):
        for a in range(21):
            for m in range(11):
                if a + m == 0:
                    continue  # binomial(-1, 0) is outside the natural domain
                assert multichoose(a, m) == binomial(a + m - 1, m)

    def test_negative_integer_base(self):
        # (-1)(0)(1).../m! vanishes as soon as the factor 0 appears
        assert multichoose(-1, 1) == -1
        assert multichoose(-1, 2) == 0
        assert multichoose(-2, 2) == 1

    def test_polynomial_base(self):
        b = RatPoly([0, 1, 1])  # x^2 + x
        expected = RatPoly([0, Fraction(1, 2), 1, 1, Fraction(1, 2)])
        assert multichoose(b, 2) == expected

    def test_cyclotomic_base(self):
        z = CycloElem.zeta(3)
        assert multichoose(z, 2) == (z * (z + 1)) / 2

    def test_negative_order_rejected(self):
        with pytest.raises(InputError):
            multichoose(3, -1)


class TestQInteger:
    def test_zero_is_zero_polynomial(self):
        assert q_integer(0).is_zero()

    def test_one(self):
        assert q_integer(1) == RatPoly.one()

    def test_three(self):
        assert q_integer(3) == RatPoly([1, 1, 1])

    def test_value_at_one_is_m(self):
        for m in range(101):
            assert ratpoly_eval(q_integer(m), Fraction(1)) == m

    def test_concatenation_law(self):
        # [a+b]_x = [a]_x + x^a [b]_x
        for a in range(31):
            for b in range(31):
                lhs = q_integer(a + b)
                rhs = q_integer(a) + RatPoly.monomial(a) * q_integer(b)
                assert lhs == rhs


class TestRatPoly:
    def test_trailing_zeros_trimmed(self):
        assert RatPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert RatPoly([0, 0]).is_zero()

    def test_degree(self):
        assert RatPoly().degree == -1
        assert RatPoly([5]).degree == 0
        assert RatPoly([0, 0, 1]).degree == 2

    def test_arithmetic(self):
        x = RatPoly.x()
        assert (x + 1) * (x - 1) == x * x - 1
        assert (x + 1) - (x + 1) == RatPoly.zero()
        assert 2 * x == x + x

    def test_scalar_division_exact(self):
        assert RatPoly([1, 3]) / 2 == RatPoly([Fraction(1, 2), Fraction(3, 2)])

    def test_pow(self):
        x = RatPoly.x()
        assert (x + 1) ** 2 == x * x + 2 * x + 1
        assert (x + 1) ** 0 == RatPoly.one()

    def test_eval_examples(self):
        f = RatPoly([0, 0, 0, 1, 1, 1])  # x^5 + x^4 + x^3
        assert ratpoly_eval(f, Fraction(-1)) == -1
        assert ratpoly_eval(RatPoly([7, 1, 4]), Fraction(0)) == 7
        assert ratpoly_eval(RatPoly([0, 1, 1]), Fraction(1)) == 2

    def test_eval_at_polynomial(self):
        f = RatPoly([1, 0, 1])  # x^2 + 1
        g = RatPoly([0, 0, 1])  # x^2
        assert ratpoly_eval(f, g) == RatPoly([1, 0, 0, 0, 1])

    def test_equality_is_canonical(self):
        assert RatPoly([Fraction(2, 4)]) == RatPoly([Fraction(1, 2)])
        assert hash(RatPoly([1, 1])) == hash(RatPoly([Fraction(2, 2), 1]))


@given(
    num=st.integers(min_value=-50, max_value=50),
    den=st.integers(min_value=1, max_value=50),
    scale=st.integers(min_value=1, max_value=20),
)
def test_rational_canonical_form(num, den, scale):
    # scaling numerator and denominator never changes the representation
    a = Fraction(num, den)
    b = Fraction(num * scale, den * scale)
    assert (a.numerator, a.denominator) == (b.numerator, b.denominator)


class TestCycloElem:
    def test_zeta_two_is_minus_one(self):
        assert CycloElem.zeta(2) == CycloElem.from_scalar(2, -1)
        assert CycloElem.zeta(2) + 1 == CycloElem.zero(2)

    def test_phi3_relation(self):
        z = CycloElem.zeta(3)
        assert z * z == CycloElem(3, [-1, -1])  # zeta^2 = -1 - zeta

    def test_order_five(self):
        z = CycloElem.zeta(5)
        assert z * z ** 4 == CycloElem.one(5)

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_root_of_unity_relations(self, p):
        z = CycloElem.zeta(p)
        assert z ** p == CycloElem.one(p)
        total = CycloElem.zero(p)
        for k in range(p):
            total = total + z ** k
        assert total == CycloElem.zero(p)

    def test_mismatched_primes_rejected(self):
        with pytest.raises(InputError):
            CycloElem.zeta(3) + CycloElem.zeta(5)
        with pytest.raises(InputError):
            cyclo_arith(CycloElem.zeta(3), CycloElem.zeta(5), "mul")

    def test_cyclo_arith_dispatch(self):
        z = CycloElem.zeta(3)
        assert cyclo_arith(z, z, "add") == 2 * z
        assert cyclo_arith(z, z, "mul") == z * z
        with pytest.raises(InputError):
            cyclo_arith(z, z, "sub")

    def test_scalar_coercion(self):
        z = CycloElem.zeta(3)
        assert (z + Fraction(1, 2)) - z == CycloElem.from_scalar(3, Fraction(1, 2))

    def test_composite_order_rejected(self):
        with pytest.raises(InputError):
            CycloElem.zeta(6)

    def test_wrong_coordinate_count_rejected(self):
        with pytest.raises(InputError):
            CycloElem(5, [1, 2])


class TestQIntegerAtRoot:
    def test_examples(self):
        assert q_integer_at_root(to_digits(7, 2), 2) == CycloElem.one(2)
        assert q_integer_at_root(to_digits(6, 3), 3) == CycloElem.zero(3)
        assert q_integer_at_root(to_digits(5, 3), 3) == CycloElem(3, [1, 1])

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_agrees_with_symbolic_evaluation(self, p):
        # residue path == evaluating 1 + x + ... + x^(m-1) at zeta_p
        z = CycloElem.zeta(p)
        for m in range(201):
            direct = ratpoly_eval(q_integer(m), z)
            assert q_integer_at_root(to_digits(m, p), p) == direct

    def test_huge_digit_list_never_materializes_m(self):
        digits = [1] + [0] * 9999 + [1]  # m = 2^10000 + 1
        assert q_integer_at_root(digits, 2) == CycloElem.one(2)

    def test_invalid_digits_rejected(self):
        with pytest.raises(InputError):
            q_integer_at_root([3, 1], 3)
        with pytest.raises(InputError):
            q_integer_at_root([1, 0], 2)  # trailing zero
        with pytest.raises(InputError):
            q_integer_at_root([1], 4)  # composite
