"""Polynomials over the prime field F_l, backed by numpy int64 arrays.

Used as an independent arithmetic path: every coefficient is reduced into
[0, l) and products are formed with ``np.convolve`` in blocks small enough that
no int64 partial sum can overflow. l must stay below 2^31.
"""
from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from qcong.core.exceptions import DivisionByZeroFunction
from qcong.models.polynomial import IntPoly

_INT64_MAX = np.iinfo(np.int64).max


def _trim(arr: np.ndarray) -> np.ndarray:
    nonzero = np.flatnonzero(arr)
    if nonzero.size == 0:
        return arr[:0]
    return arr[: nonzero[-1] + 1]


class FpPoly:
    """Polynomial over F_ell"""

    __slots__ = ("coeffs", "ell")

    def __init__(self, coeffs: Sequence[int], ell: int):
        if ell < 2 or ell >= 2**31:
            raise ValueError(f"field size {ell} out of range")
        arr = np.asarray([int(c) % ell for c in coeffs], dtype=np.int64)
        self.coeffs = _trim(arr)
        self.ell = ell

    @classmethod
    def _wrap(cls, arr: np.ndarray, ell: int) -> "FpPoly":
        poly = cls.__new__(cls)
        poly.coeffs = _trim(arr)
        poly.ell = ell
        return poly

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def leading(self) -> int:
        return int(self.coeffs[-1]) if self.coeffs.size else 0

    def to_list(self):
        return [int(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"FpPoly({self.to_list()}, ell={self.ell})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.ell == other.ell and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None

    def _check(self, other: "FpPoly") -> None:
        if self.ell != other.ell:
            raise ValueError(f"mixing F_{self.ell} and F_{other.ell}")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        n = max(self.coeffs.size, other.coeffs.size)
        out = np.zeros(n, dtype=np.int64)
        out[: self.coeffs.size] += self.coeffs
        out[: other.coeffs.size] += other.coeffs
        return FpPoly._wrap(out % self.ell, self.ell)

    def __neg__(self) -> "FpPoly":
        return FpPoly._wrap((-self.coeffs) % self.ell, self.ell)

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if a.size == 0 or b.size == 0:
            return FpPoly._wrap(a[:0], self.ell)
        if a.size < b.size:
            a, b = b, a
        ell = self.ell
        block = max(1, _INT64_MAX // ((ell - 1) ** 2))
        out = np.zeros(a.size + b.size - 1, dtype=np.int64)
        # each chunk of b contributes at most `block` products per output entry
        for start in range(0, b.size, block):
            part = np.convolve(a, b[start:start + block]) % ell
            out[start:start + part.size] += part
            out[start:start + part.size] %= ell
        return FpPoly._wrap(out, ell)

    def divrem(self, divisor: "FpPoly") -> Tuple["FpPoly", "FpPoly"]:
        """Long division; the divisor is made monic with the inverse of its leading coefficient."""
        self._check(divisor)
        if divisor.is_zero:
            raise DivisionByZeroFunction("division by the zero polynomial over F_ell")
        ell = self.ell
        inv = pow(divisor.leading, -1, ell)
        b = (divisor.coeffs * inv) % ell
        db = b.size - 1
        r = self.coeffs.copy()
        if r.size <= db:
            return FpPoly._wrap(r[:0], ell), FpPoly._wrap(r, ell)
        quotient = np.zeros(r.size - db, dtype=np.int64)
        for k in range(r.size - 1 - db, -1, -1):
            c = int(r[k + db])
            if c:
                quotient[k] = c
                r[k:k + db + 1] = (r[k:k + db + 1] - c * b) % ell
        # undo the monic scaling on the quotient
        quotient = (quotient * inv) % ell
        return FpPoly._wrap(quotient, ell), FpPoly._wrap(r[:db], ell)

    def divides(self, other: "FpPoly") -> bool:
        """True if self divides other"""
        return other.divrem(self)[1].is_zero

    def gcd(self, other: "FpPoly") -> "FpPoly":
        """Monic greatest common divisor (zero when both are zero)."""
        self._check(other)
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.divrem(b)[1]
        if a.is_zero:
            return a
        return FpPoly._wrap((a.coeffs * pow(a.leading, -1, a.ell)) % a.ell, a.ell)


def mod_prime_image(a: IntPoly, ell: int) -> FpPoly:
    """Coefficientwise reduction of an integer polynomial modulo ell."""
    return FpPoly(a.coeffs, ell)
