"""Tests for polynomials over F_ell"""
import pytest
from sympy import prevprime

from qcong.core.exceptions import DivisionByZeroFunction
from qcong.models.finite_field import FpPoly, mod_prime_image
from qcong.models.polynomial import IntPoly

BIG_ELL = int(prevprime(2**20))


def test_reduction():
    assert mod_prime_image(IntPoly([-2, 0, 0, 7]), 7).to_list() == [5]
    assert mod_prime_image(IntPoly([14, 21]), 7).is_zero


def test_field_size_range():
    with pytest.raises(ValueError):
        FpPoly([1], 1)
    with pytest.raises(ValueError):
        FpPoly([1], 2**31)


def test_product_matches_integer_product(rng):
    a = IntPoly(rng.randint(-(10**12), 10**12) for _ in range(300))
    b = IntPoly(rng.randint(-(10**12), 10**12) for _ in range(200))
    expected = mod_prime_image(a * b, BIG_ELL)
    assert mod_prime_image(a, BIG_ELL) * mod_prime_image(b, BIG_ELL) == expected


def test_add_sub(rng):
    a = FpPoly([rng.randrange(BIG_ELL) for _ in range(10)], BIG_ELL)
    b = FpPoly([rng.randrange(BIG_ELL) for _ in range(7)], BIG_ELL)
    assert (a + b) - b == a
    assert (a - a).is_zero


def test_divrem_non_monic(rng):
    ell = 65537
    b = FpPoly([3, 1, 4, 1, 5], ell)
    quotient = FpPoly([rng.randrange(ell) for _ in range(12)], ell)
    remainder = FpPoly([2, 7, 1], ell)
    q, r = (quotient * b + remainder).divrem(b)
    assert q == quotient
    assert r == remainder


def test_divides():
    ell = 101
    phi = FpPoly([1, 1, 1], ell)
    assert phi.divides(FpPoly([1, 0, 0, ell - 1], ell))
    assert not phi.divides(FpPoly([1, 0, 0, 1], ell))


def test_division_by_zero():
    with pytest.raises(DivisionByZeroFunction):
        FpPoly([1, 2], 5).divrem(FpPoly([], 5))


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        FpPoly([1], 5) + FpPoly([1], 7)


def test_gcd_is_monic():
    ell = 101
    phi = FpPoly([1, 1, 1], ell)
    assert phi.gcd(phi * FpPoly([3, 5], ell)) == phi
    assert phi.gcd(FpPoly([1, ell - 1, 1], ell)).degree == 0
    assert FpPoly([4, 2], ell).gcd(FpPoly([], ell)) == FpPoly([2, 1], ell)
