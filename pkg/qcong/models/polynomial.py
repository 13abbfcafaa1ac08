"""Dense univariate polynomials in q with arbitrary-precision integer coefficients.

Coefficients are stored ascending (index i holds the coefficient of q^i) in an
immutable tuple with no trailing zeros. The zero polynomial is the empty tuple
and has degree ``DEGREE_ZERO_POLY``.

Multiplication goes through one of three interchangeable algorithms:

* schoolbook - quadratic, always available, the reference;
* karatsuba - two-way splitting down to ``KARATSUBA_CUTOFF``;
* kronecker - pack both operands into one big integer, multiply once, unpack.

The algorithm is chosen by ``settings.MUL_ALGORITHM``; all three give identical
results.
"""
from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from qcong.core.config import settings
from qcong.core.exceptions import InexactDivision, NonMonicDivisor

try:
    import gmpy2
except ImportError:  # pragma: no cover - optional accelerator
    gmpy2 = None


DEGREE_ZERO_POLY = -math.inf


def _trim(coeffs: List[int]) -> Tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# Coefficient-list multiplication
# ---------------------------------------------------------------------------

def schoolbook_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Quadratic product of two coefficient lists."""
    if not a or not b:
        return []
    if len(a) > len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _add_lists(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def _sub_into(target: List[int], b: Sequence[int]) -> None:
    if len(target) < len(b):
        target.extend([0] * (len(b) - len(target)))
    for i, y in enumerate(b):
        target[i] -= y


def karatsuba_mul(a: Sequence[int], b: Sequence[int], cutoff: Optional[int] = None) -> List[int]:
    """
    Two-way Karatsuba product.

    With Y = q^h, a = a0 + Y a1 and b = b0 + Y b1:
        a*b = a0 b0 + Y ((a0 + a1)(b0 + b1) - a0 b0 - a1 b1) + Y^2 a1 b1
    Operands of very different length are cut into pieces of the shorter length.
    """
    if cutoff is None:
        cutoff = settings.KARATSUBA_CUTOFF
    cutoff = max(cutoff, 1)
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    la, lb = len(a), len(b)
    if lb <= cutoff:
        return schoolbook_mul(a, b)

    out = [0] * (la + lb - 1)
    if la >= 2 * lb:
        for start in range(0, la, lb):
            piece = karatsuba_mul(a[start:start + lb], b, cutoff)
            for i, c in enumerate(piece):
                out[start + i] += c
        return out

    h = la // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = karatsuba_mul(a0, b0, cutoff)
    z2 = karatsuba_mul(a1, b1, cutoff)
    z1 = karatsuba_mul(_add_lists(a0, a1), _add_lists(b0, b1), cutoff)
    _sub_into(z1, z0)
    _sub_into(z1, z2)

    for i, c in enumerate(z0):
        out[i] += c
    for i, c in enumerate(z1):
        if c:
            out[i + h] += c
    for i, c in enumerate(z2):
        out[i + 2 * h] += c
    return out


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    """Nonnegative coefficients -> one integer with nbytes per slot."""
    return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little")


def _pack_signed(coeffs: Sequence[int], nbytes: int) -> int:
    positive = _pack([c if c > 0 else 0 for c in coeffs], nbytes)
    negative = _pack([-c if c < 0 else 0 for c in coeffs], nbytes)
    return positive - negative


def kronecker_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """
    Kronecker substitution: evaluate both operands at 2^w, multiply the two
    integers, read the product coefficients back out of w-bit slots.

    w is chosen so that every product coefficient c satisfies |c| < 2^(w-1);
    unpacking adds 2^(w-1) to every slot so all slots are nonnegative.
    """
    if not a or not b:
        return []
    bound = min(len(a), len(b)) * max(abs(c) for c in a) * max(abs(c) for c in b)
    if bound == 0:
        return []
    nbytes = (bound.bit_length() + 1 + 7) // 8
    width = 8 * nbytes
    half = 1 << (width - 1)
    length = len(a) + len(b) - 1

    x = _pack_signed(a, nbytes)
    y = _pack_signed(b, nbytes)
    if gmpy2 is not None:
        product = int(gmpy2.mpz(x) * gmpy2.mpz(y))
    else:
        product = x * y

    offset = int.from_bytes(half.to_bytes(nbytes, "little") * length, "little")
    data = (product + offset).to_bytes(length * nbytes, "little")
    return [
        int.from_bytes(data[i * nbytes:(i + 1) * nbytes], "little") - half
        for i in range(length)
    ]


def _nonzero_count(coeffs: Sequence[int]) -> int:
    return sum(1 for c in coeffs if c)


def multiply_coeffs(a: Sequence[int], b: Sequence[int], algorithm: Optional[str] = None) -> List[int]:
    """Product of two coefficient lists using the configured algorithm."""
    if not a or not b:
        return []
    algorithm = algorithm or settings.MUL_ALGORITHM
    # sparse operands (monomials, binomials, ...) are cheapest term by term
    if min(_nonzero_count(a), _nonzero_count(b)) <= 4:
        return schoolbook_mul(a, b)
    if algorithm == "kronecker" and min(len(a), len(b)) >= settings.KRONECKER_CUTOFF:
        return kronecker_mul(a, b)
    if algorithm in ("kronecker", "karatsuba"):
        return karatsuba_mul(a, b)
    return schoolbook_mul(a, b)


# ---------------------------------------------------------------------------
# IntPoly
# ---------------------------------------------------------------------------

class IntPoly:
    """Immutable dense polynomial in q over the integers"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def _trimmed(cls, coeffs: Tuple[int, ...]) -> "IntPoly":
        poly = cls.__new__(cls)
        object.__setattr__(poly, "coeffs", coeffs)
        return poly

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls._trimmed(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls._trimmed((1,))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "IntPoly":
        """c * q^exponent"""
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent}")
        if c == 0:
            return cls.zero()
        return cls._trimmed((0,) * exponent + (int(c),))

    # -- queries --------------------------------------------------------------

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else DEGREE_ZERO_POLY

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)"""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def evaluate(self, x: Union[int, Fraction]) -> Fraction:
        """Exact value at a rational point, by homogenized integer Horner."""
        x = Fraction(x)
        if not self.coeffs:
            return Fraction(0)
        a, b = x.numerator, x.denominator
        acc, bpow = 0, 1
        for c in reversed(self.coeffs):
            acc = acc * a + c * bpow
            bpow *= b
        return Fraction(acc, bpow // b)

    # -- ring operations ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional["IntPoly"]:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.constant(other)
        return None

    def __add__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntPoly._trimmed(_trim(_add_lists(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly._trimmed(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = list(self.coeffs)
        _sub_into(out, other.coeffs)
        return IntPoly._trimmed(_trim(out))

    def __rsub__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly._trimmed(_trim(multiply_coeffs(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: int) -> "IntPoly":
        if c == 0:
            return IntPoly.zero()
        return IntPoly._trimmed(tuple(c * x for x in self.coeffs))

    def shift(self, e: int) -> "IntPoly":
        """Multiply by q^e"""
        if not self.coeffs or e == 0:
            return self
        return IntPoly._trimmed((0,) * e + self.coeffs)

    def dilate(self, s: int) -> "IntPoly":
        """Substitute q <- q^s"""
        if s < 1:
            raise ValueError(f"dilation factor must be positive, got {s}")
        if s == 1 or len(self.coeffs) <= 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * s + 1)
        out[::s] = self.coeffs
        return IntPoly._trimmed(tuple(out))

    # -- linear-time products and exact quotients -----------------------------

    def mul_binomial(self, c: int, e: int) -> "IntPoly":
        """Multiply by (1 - c q^e)"""
        if not self.coeffs or c == 0:
            return self
        out = list(self.coeffs) + [0] * e
        for i, a in enumerate(self.coeffs):
            out[i + e] -= c * a
        return IntPoly._trimmed(_trim(out))

    def mul_one_minus_q_power(self, n: int) -> "IntPoly":
        return self.mul_binomial(1, n)

    def div_one_minus_q_power(self, n: int) -> "IntPoly":
        """Exact quotient by (1 - q^n); InexactDivision if it does not divide."""
        if n < 1:
            raise ValueError(f"cannot divide by 1 - q^{n}")
        f = self.coeffs
        if not f:
            return self
        g = list(f)
        for i in range(n, len(g)):
            g[i] += g[i - n]
        cut = max(len(f) - n, 0)
        if any(g[cut:]):
            raise InexactDivision(f"1 - q^{n} does not divide polynomial of degree {self.degree}")
        return IntPoly._trimmed(_trim(g[:cut]))

    def mul_qint(self, n: int) -> "IntPoly":
        """Multiply by [n]_q"""
        if n == 0:
            return IntPoly.zero()
        return self.mul_one_minus_q_power(n).div_one_minus_q_power(1)

    def div_qint(self, n: int) -> "IntPoly":
        """Exact quotient by [n]_q"""
        if n < 1:
            raise InexactDivision(f"cannot divide by [{n}]_q")
        return self.mul_one_minus_q_power(1).div_one_minus_q_power(n)

    def divide_exact(self, other: "IntPoly") -> "IntPoly":
        """Exact quotient by a polynomial with leading coefficient +-1."""
        if other.leading == -1:
            quotient, remainder = monic_divrem(-self, -other)
        else:
            quotient, remainder = monic_divrem(self, other)
        if remainder:
            raise InexactDivision(f"{other!r} does not divide the dividend")
        return quotient

    # -- rendering ------------------------------------------------------------

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def coefficient_string(self) -> str:
        """Ascending, space-separated; the zero polynomial prints as 0"""
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def pretty(self, var: str = "q") -> str:
        """Human-readable rendering such as 1 - q + 2q^2"""
        parts: List[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if i == 0:
                body = str(magnitude)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

class RingOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    NEG = "neg"
    SCALE = "scale"


def ring_arith(a: IntPoly, b: Union[IntPoly, int, None], op: Union[RingOp, str]) -> IntPoly:
    """Exact ring operation; for SCALE ``b`` is an integer, for NEG it is ignored."""
    op = RingOp(op)
    if op is RingOp.ADD:
        return a + b
    if op is RingOp.SUB:
        return a - b
    if op is RingOp.MUL:
        return a * b
    if op is RingOp.NEG:
        return -a
    return a.scale(int(b))


def monic_divrem(a: IntPoly, b: IntPoly) -> Tuple[IntPoly, IntPoly]:
    """
    Euclidean division by a monic polynomial.

    Returns (quotient, remainder) with a = quotient*b + remainder and
    degree(remainder) < degree(b). Only the nonzero coefficients of b are
    visited, so sparse divisors cost O(len(a) * nnz(b)).
    """
    if not b.is_monic:
        raise NonMonicDivisor(f"divisor leading coefficient is {b.leading}, expected 1")
    db = len(b.coeffs) - 1
    if len(a.coeffs) <= db:
        return IntPoly.zero(), a

    r = list(a.coeffs)
    terms = [(i, c) for i, c in enumerate(b.coeffs[:-1]) if c]
    quotient = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            quotient[k] = c
            for i, bi in terms:
                r[k + i] -= c * bi
    return IntPoly._trimmed(_trim(quotient)), IntPoly._trimmed(_trim(r[:db]))
