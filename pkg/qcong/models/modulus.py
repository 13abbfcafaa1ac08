"""The modulus [p]_q^k, a power of the p-th cyclotomic polynomial"""
from __future__ import annotations

from math import comb
from typing import Tuple

from sympy import isprime

from qcong.core.exceptions import InexactDivision, InvalidPrime
from qcong.models.polynomial import IntPoly, monic_divrem


class QModulus:
    """
    [p]_q^k for an odd prime p.

    Reduction avoids dividing by the dense [p]_q^k directly: since
    (1 - q)^k [p]_q^k = (1 - q^p)^k = (-1)^k (q^p - 1)^k, we divide
    a (1 - q)^k by the sparse monic B = (q^p - 1)^k and map back:
        a (1 - q)^k = T B + R'  =>  a = (-1)^k T [p]_q^k + R' / (1 - q)^k
    """

    __slots__ = ("p", "k", "poly", "_sparse")

    def __init__(self, p: int, k: int):
        if p < 3 or not isprime(p):
            raise InvalidPrime(f"{p} is not an odd prime")
        if k < 1:
            raise ValueError(f"modulus exponent must be positive, got {k}")
        self.p = p
        self.k = k
        self.poly = IntPoly([1] * p) ** k
        sparse = [0] * (k * p + 1)
        for i in range(k + 1):
            sparse[i * p] = comb(k, i) * (-1) ** (k - i)
        self._sparse = IntPoly(sparse)

    @property
    def degree(self) -> int:
        return self.k * (self.p - 1)

    def __repr__(self) -> str:
        return f"QModulus(p={self.p}, k={self.k})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, QModulus):
            return NotImplemented
        return (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def divrem(self, a: IntPoly) -> Tuple[IntPoly, IntPoly]:
        """Same result as monic_divrem(a, self.poly), in O(len(a) * k)."""
        if a.is_zero:
            return a, a
        shifted = a
        for _ in range(self.k):
            shifted = shifted.mul_one_minus_q_power(1)
        quotient, remainder = monic_divrem(shifted, self._sparse)
        for _ in range(self.k):
            remainder = remainder.div_one_minus_q_power(1)
        if self.k % 2:
            quotient = -quotient
        return quotient, remainder

    def phi_valuation(self, a: IntPoly) -> Tuple[int, IntPoly]:
        """(v, a / [p]_q^v) with v the largest power of [p]_q dividing a nonzero a."""
        if a.is_zero:
            raise ValueError("valuation of the zero polynomial")
        v = 0
        while True:
            try:
                a = a.div_qint(self.p)
            except InexactDivision:
                return v, a
            v += 1
