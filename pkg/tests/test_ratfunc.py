"""Tests for RatFunc"""
from fractions import Fraction

import pytest

from qcong.core.exceptions import DivisionByZeroFunction, PoleAtPoint
from qcong.models.polynomial import IntPoly
from qcong.models.ratfunc import RatFunc, RatOp, eval_at, rf_arith, rf_normalize

ONE_MINUS_Q = IntPoly([1, -1])


def test_zero_denominator_rejected():
    with pytest.raises(DivisionByZeroFunction):
        RatFunc(IntPoly([1]), IntPoly.zero())


def test_sign_moves_to_numerator():
    value = RatFunc(IntPoly([1, 1]), IntPoly([-2]))
    assert value.den == IntPoly([2])
    assert value.num == IntPoly([-1, -1])


def test_normalize_cancels_common_factor():
    value = rf_normalize(RatFunc(IntPoly([1, 0, -1]), ONE_MINUS_Q))
    assert value.num == IntPoly([1, 1])
    assert value.den == IntPoly.one()


def test_normalize_removes_content():
    value = RatFunc(IntPoly([4, 6]), IntPoly([2, 0, 2])).normalize()
    assert value.num == IntPoly([2, 3])
    assert value.den == IntPoly([1, 0, 1])


def test_normalize_zero():
    value = RatFunc(IntPoly.zero(), IntPoly([3, 1])).normalize()
    assert value.num.is_zero
    assert value.den == IntPoly.one()


def test_equality_is_by_value():
    half = RatFunc(IntPoly([1]), IntPoly([2]))
    assert RatFunc(IntPoly([1, 1]), IntPoly([2, 2])) == half
    assert half == Fraction(1, 2)


def test_arithmetic(rng):
    a = RatFunc(IntPoly([1, 2]), IntPoly([1, 1]))
    b = RatFunc(IntPoly([3]), IntPoly([1, 0, 1]))
    assert rf_arith(a, b, RatOp.ADD) - b == a
    assert rf_arith(a, b, "mul") / b == a
    assert (a - a).is_zero
    assert a ** 2 == a * a
    assert a.scale(Fraction(2, 3)) == a * Fraction(2, 3)


def test_division_by_zero_function():
    with pytest.raises(DivisionByZeroFunction):
        RatFunc(1) / RatFunc(0)


def test_combine():
    value = RatFunc.combine([(Fraction(1, 2), ONE_MINUS_Q), (Fraction(1, 3), IntPoly.one())])
    assert value == RatFunc(IntPoly([5, -3]), IntPoly([6]))


def test_settle_only_past_threshold():
    value = RatFunc(IntPoly([1, 0, -1]), ONE_MINUS_Q)
    assert value.settle(10) is value
    assert value.settle(1).den == IntPoly.one()


def test_evaluate_and_pole():
    value = RatFunc(IntPoly([1, 1]), ONE_MINUS_Q)
    assert eval_at(value, 2) == -3
    assert eval_at(IntPoly([1, 1, 1]), 2) == 7
    with pytest.raises(PoleAtPoint):
        value.evaluate(1)


def test_limit_at_one_cancels_removable_singularity():
    value = RatFunc(IntPoly([1, 0, 0, -1]), IntPoly([1, 0, -1]))
    assert value.limit_at_one() == Fraction(3, 2)
    with pytest.raises(PoleAtPoint):
        RatFunc(IntPoly([1]), ONE_MINUS_Q).limit_at_one()


def test_render():
    assert RatFunc(IntPoly([0, 2]), IntPoly([2])).render() == "0 1"
    assert RatFunc(IntPoly([0, 2]), IntPoly([2])).render(pretty=True) == "q"
    assert RatFunc(IntPoly([2, 1]), IntPoly([1, 1])).render() == "2 1 / 1 1"


def random_poly(rng, degree, low=-9, high=9):
    return IntPoly(rng.randint(low, high) for _ in range(degree + 1))


def random_ratfunc(rng):
    # positive denominator coefficients keep every positive point away from a pole
    return RatFunc(random_poly(rng, rng.randint(0, 5)), random_poly(rng, rng.randint(0, 4), 1, 9))


def test_normalize_is_idempotent(rng):
    for _ in range(30):
        common = random_poly(rng, rng.randint(0, 3), 1, 5)
        value = random_ratfunc(rng)
        value = RatFunc(value.num * common, value.den * common)
        once = rf_normalize(value)
        twice = rf_normalize(once)
        assert (twice.num, twice.den) == (once.num, once.den)
        assert once == value


def test_evaluation_is_a_homomorphism(rng):
    for _ in range(30):
        a, b = random_ratfunc(rng), random_ratfunc(rng)
        x = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert eval_at(a * b, x) == eval_at(a, x) * eval_at(b, x)
        assert eval_at(a + b, x) == eval_at(a, x) + eval_at(b, x)
