"""Tests for IntPoly and the multiplication algorithms"""
from fractions import Fraction

import pytest

from qcong.core.exceptions import InexactDivision, NonMonicDivisor
from qcong.models.polynomial import (
    DEGREE_ZERO_POLY,
    IntPoly,
    RingOp,
    karatsuba_mul,
    kronecker_mul,
    monic_divrem,
    multiply_coeffs,
    ring_arith,
    schoolbook_mul,
)


def random_coeffs(rng, length, bits=64):
    return [rng.randint(-(2**bits), 2**bits) for _ in range(length)]


def random_poly(rng, degree, bits=20):
    return IntPoly(random_coeffs(rng, degree + 1, bits))


class TestConstruction:
    def test_trailing_zeros_are_trimmed(self):
        assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert IntPoly([0, 0]).is_zero

    def test_zero_degree(self):
        assert IntPoly.zero().degree == DEGREE_ZERO_POLY
        assert IntPoly.one().degree == 0

    def test_monomial(self):
        assert IntPoly.monomial(3, -2).coeffs == (0, 0, 0, -2)
        assert IntPoly.monomial(5, 0).is_zero

    def test_immutable(self):
        with pytest.raises(AttributeError):
            IntPoly([1]).coeffs = (2,)

    def test_equality_with_int(self):
        assert IntPoly([4]) == 4
        assert IntPoly.zero() == 0


class TestRing:
    def test_add_sub_neg(self):
        a, b = IntPoly([1, 2, 3]), IntPoly([1, -2, -3])
        assert a + b == IntPoly([2])
        assert a - a == IntPoly.zero()
        assert -a == IntPoly([-1, -2, -3])
        assert 1 - IntPoly([0, 1]) == IntPoly([1, -1])

    def test_ring_arith_dispatch(self):
        a, b = IntPoly([1, 1]), IntPoly([1, -1])
        assert ring_arith(a, b, RingOp.MUL) == IntPoly([1, 0, -1])
        assert ring_arith(a, b, "add") == IntPoly([2])
        assert ring_arith(a, None, "neg") == IntPoly([-1, -1])
        assert ring_arith(a, 3, RingOp.SCALE) == IntPoly([3, 3])

    def test_power(self):
        assert IntPoly([1, 1]) ** 3 == IntPoly([1, 3, 3, 1])
        assert IntPoly([5, 7]) ** 0 == IntPoly.one()

    def test_evaluate_exact(self):
        poly = IntPoly([1, -3, 2])
        assert poly.evaluate(2) == 3
        assert poly.evaluate(Fraction(1, 2)) == 0
        assert IntPoly.zero().evaluate(7) == 0

    def test_dilate(self):
        assert IntPoly([1, 1]).dilate(3) == IntPoly([1, 0, 0, 1])


class TestMultiplication:
    @pytest.mark.parametrize("length_a,length_b", [(1, 1), (5, 9), (40, 40), (70, 13), (129, 64)])
    def test_algorithms_agree(self, rng, length_a, length_b):
        a = random_coeffs(rng, length_a)
        b = random_coeffs(rng, length_b)
        expected = schoolbook_mul(a, b)
        assert karatsuba_mul(a, b, cutoff=4) == expected
        assert kronecker_mul(a, b) == expected

    def test_kronecker_handles_zero_slots(self):
        a = [0, 0, -5, 0, 3]
        b = [7, 0, 0, 0, 0, -1]
        assert kronecker_mul(a, b) == schoolbook_mul(a, b)

    @pytest.mark.parametrize("algorithm", ["schoolbook", "karatsuba", "kronecker"])
    def test_configured_algorithm(self, rng, algorithm):
        a, b = random_coeffs(rng, 50), random_coeffs(rng, 33)
        assert multiply_coeffs(a, b, algorithm) == schoolbook_mul(a, b)

    def test_commutative_and_associative(self, rng):
        a, b, c = (random_poly(rng, 25) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


class TestDivision:
    def test_divrem_with_remainder(self):
        quotient, remainder = monic_divrem(IntPoly([1, 0, 0, 1]), IntPoly([1, 1, 1]))
        assert quotient == IntPoly([-1, 1])
        assert remainder == IntPoly([2])

    def test_divrem_exact(self):
        quotient, remainder = monic_divrem(IntPoly([1, 0, 0, -1]), IntPoly([1, 1, 1]))
        assert quotient == IntPoly([1, -1])
        assert remainder.is_zero

    def test_divrem_small_dividend(self):
        quotient, remainder = monic_divrem(IntPoly([3, 1]), IntPoly([1, 1, 1]))
        assert quotient.is_zero
        assert remainder == IntPoly([3, 1])

    def test_non_monic_divisor(self):
        with pytest.raises(NonMonicDivisor):
            monic_divrem(IntPoly([1, 2, 3]), IntPoly([1, 2]))

    def test_divrem_reconstructs(self, rng):
        for _ in range(20):
            a = random_poly(rng, rng.randint(0, 40))
            b = random_poly(rng, rng.randint(1, 10)).coeffs[:-1] + (1,)
            b = IntPoly(b)
            quotient, remainder = monic_divrem(a, b)
            assert quotient * b + remainder == a
            assert remainder.degree < b.degree

    def test_linear_time_helpers(self, rng):
        a = random_poly(rng, 30)
        assert a.mul_qint(7).div_qint(7) == a
        assert a.mul_one_minus_q_power(4).div_one_minus_q_power(4) == a
        assert a.mul_qint(5) == a * IntPoly([1] * 5)
        assert a.mul_binomial(-1, 3) == a * IntPoly([1, 0, 0, 1])

    def test_inexact_division(self):
        with pytest.raises(InexactDivision):
            IntPoly([1, 1]).div_qint(3)
        with pytest.raises(InexactDivision):
            IntPoly([1, 2, 1]).divide_exact(IntPoly([1, 0, 1]))

    def test_divide_exact_negative_leading(self):
        product = IntPoly([1, -1]) * IntPoly([2, 3, 4])
        assert product.divide_exact(IntPoly([1, -1])) == IntPoly([2, 3, 4])


class TestRendering:
    def test_coefficient_string(self):
        assert IntPoly([1, 1, 2, 1, 1]).coefficient_string() == "1 1 2 1 1"
        assert IntPoly.zero().coefficient_string() == "0"

    def test_pretty(self):
        assert IntPoly([1, -1, 2]).pretty() == "1 - q + 2q^2"
        assert IntPoly([0, 1]).pretty() == "q"
        assert IntPoly([-3]).pretty() == "-3"
