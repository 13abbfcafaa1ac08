"""Rational functions in q: fractions of two IntPoly.

Arithmetic is lazy: results are not reduced to lowest terms. Callers that care
about size call ``settle`` (normalize past a degree threshold) or ``normalize``.
"""
from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Iterable, Tuple, Union

from sympy import Poly, Symbol, ZZ

from qcong.core.exceptions import DivisionByZeroFunction, PoleAtPoint
from qcong.models.polynomial import IntPoly

Rational = Fraction

_Q = Symbol("q")


def _to_sympy(poly: IntPoly) -> Poly:
    return Poly.from_list(list(reversed(poly.coeffs)) or [0], _Q, domain=ZZ)


def _from_sympy(poly: Poly) -> IntPoly:
    return IntPoly(int(c) for c in reversed(poly.all_coeffs()))


class RatFunc:
    """num/den with den nonzero and positive leading coefficient"""

    __slots__ = ("num", "den")

    def __init__(self, num: Union[IntPoly, int], den: Union[IntPoly, int] = 1):
        if isinstance(num, int):
            num = IntPoly.constant(num)
        if isinstance(den, int):
            den = IntPoly.constant(den)
        if den.is_zero:
            raise DivisionByZeroFunction("rational function with zero denominator")
        if den.leading < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int]) -> "RatFunc":
        value = Fraction(value)
        return cls(IntPoly.constant(value.numerator), IntPoly.constant(value.denominator))

    @classmethod
    def combine(cls, terms: Iterable[Tuple[Union[Fraction, int], IntPoly]]) -> "RatFunc":
        """Linear combination sum(c_i * poly_i) with rational constants c_i."""
        terms = [(Fraction(c), poly) for c, poly in terms]
        common = 1
        for c, _ in terms:
            common = common * c.denominator // math.gcd(common, c.denominator)
        num = IntPoly.zero()
        for c, poly in terms:
            if c:
                num = num + poly.scale(c.numerator * (common // c.denominator))
        return cls(num, IntPoly.constant(common))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, IntPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_fraction(other)
        return NotImplemented

    def __add__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise DivisionByZeroFunction("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return RatFunc(1) / (self ** -n)
        return RatFunc(self.num ** n, self.den ** n)

    def scale(self, c: Union[Fraction, int]) -> "RatFunc":
        c = Fraction(c)
        return RatFunc(self.num.scale(c.numerator), self.den.scale(c.denominator))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    __hash__ = None

    # -- reduction ------------------------------------------------------------

    def normalize(self) -> "RatFunc":
        """Lowest terms: content-free, coprime, positive leading denominator."""
        if self.num.is_zero:
            return RatFunc(IntPoly.zero(), IntPoly.one())
        num, den = self.num, self.den
        if not den.is_constant:
            g = _to_sympy(num).gcd(_to_sympy(den))
            if g.degree() > 0:
                _, primitive = g.primitive()
                num = _from_sympy(_to_sympy(num).exquo(primitive))
                den = _from_sympy(_to_sympy(den).exquo(primitive))
        c = math.gcd(num.content(), den.content())
        if den.leading < 0:
            c = -c
        return RatFunc(IntPoly(x // c for x in num.coeffs), IntPoly(x // c for x in den.coeffs))

    def settle(self, threshold: int) -> "RatFunc":
        """Normalize only when the combined degree exceeds ``threshold``."""
        if max(self.num.degree, 0) + max(self.den.degree, 0) > threshold:
            return self.normalize()
        return self

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, x: Union[Fraction, int]) -> Fraction:
        d = self.den.evaluate(x)
        if d == 0:
            raise PoleAtPoint(f"denominator vanishes at q = {x}")
        return self.num.evaluate(x) / d

    def limit_at_one(self) -> Fraction:
        """Value at q = 1 after cancelling common factors of (1 - q)."""
        num, den = self.num, self.den
        while den.value_at_one() == 0:
            if num.value_at_one() != 0:
                raise PoleAtPoint("pole at q = 1")
            num = num.div_one_minus_q_power(1)
            den = den.div_one_minus_q_power(1)
        return Fraction(num.value_at_one(), den.value_at_one())

    # -- rendering ------------------------------------------------------------

    def render(self, pretty: bool = False) -> str:
        """Normalized value: a polynomial prints alone, otherwise as num / den"""
        value = self.normalize()
        num, den = value.num, value.den
        if den == IntPoly.one():
            return num.pretty() if pretty else num.coefficient_string()
        if pretty:
            return f"({num.pretty()}) / ({den.pretty()})"
        return f"{num.coefficient_string()} / {den.coefficient_string()}"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

class RatOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def rf_arith(a: RatFunc, b: RatFunc, op: Union[RatOp, str]) -> RatFunc:
    """Cross-multiplication arithmetic; no reduction."""
    op = RatOp(op)
    if op is RatOp.ADD:
        return a + b
    if op is RatOp.SUB:
        return a - b
    if op is RatOp.MUL:
        return a * b
    return a / b


def rf_normalize(a: RatFunc) -> RatFunc:
    return a.normalize()


def eval_at(a: Union[IntPoly, RatFunc], x: Union[Fraction, int]) -> Fraction:
    """Exact value of a polynomial or rational function at a rational point."""
    return a.evaluate(x)
