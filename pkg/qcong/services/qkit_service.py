"""q-object construction service"""
import logging
from functools import lru_cache
from math import comb
from typing import List, Optional

from sympy import isprime

from qcong.core.config import settings
from qcong.core.exceptions import (
    InexactDivision,
    InternalInconsistency,
    InvalidPrime,
    PrimeDividesBase,
)
from qcong.models.modulus import QModulus
from qcong.models.polynomial import IntPoly
from qcong.models.ratfunc import RatFunc
from qcong.schemas.qobjects import PochSpec, SumSpec, SumWeight

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def _binom_by_recurrence(n: int, m: int) -> IntPoly:
    # [i, j] = q^j [i-1, j] + [i-1, j-1], columns 0..m only
    row = [IntPoly.one()]
    for i in range(1, n + 1):
        new = [IntPoly.one()]
        for j in range(1, min(i, m) + 1):
            left = row[j].shift(j) if j < len(row) else IntPoly.zero()
            new.append(left + row[j - 1])
        row = new
    return row[m]


class QKitService:
    """Builders for q-integers, q-Pochhammer symbols, Gaussian binomials and sums"""

    @staticmethod
    def q_int(n: int) -> IntPoly:
        """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0"""
        if n < 0:
            raise ValueError(f"q-integer of negative n = {n}")
        return IntPoly([1] * n)

    @staticmethod
    def q_poch(spec: PochSpec) -> IntPoly:
        """Expanded prod_{j<n} (1 - c q^(e + j s))"""
        result = IntPoly.one()
        for j in range(spec.length):
            result = result.mul_binomial(spec.sign, spec.offset + j * spec.step)
        return result

    @staticmethod
    def q_binom(n: int, m: int, s: int = 1) -> IntPoly:
        """
        Gaussian binomial [n, m] in the variable q^s.

        Computed by the recurrence in base q and dilated by s. With
        QBINOM_CROSS_CHECK on, the factorial quotient is computed natively in
        q^s as well and the two must agree.
        """
        if s < 1:
            raise ValueError(f"base exponent must be positive, got {s}")
        if m < 0 or n < m:
            return IntPoly.zero()
        result = QKitService.q_binom_recurrence(n, m).dilate(s)
        if settings.QBINOM_CROSS_CHECK:
            other = QKitService.q_binom_quotient(n, m, s)
            if other != result:
                logger.error(f"❌ [QKIT] q_binom({n}, {m}, {s}) recurrence and quotient disagree")
                raise InternalInconsistency(f"q_binom({n}, {m}, {s}): recurrence != quotient")
        return result

    @staticmethod
    def q_binom_recurrence(n: int, m: int) -> IntPoly:
        if m < 0 or n < m:
            return IntPoly.zero()
        return _binom_by_recurrence(n, min(m, n - m))

    @staticmethod
    def q_binom_quotient(n: int, m: int, s: int = 1) -> IntPoly:
        """(Q;Q)_n / ((Q;Q)_m (Q;Q)_{n-m}) with Q = q^s, by exact long division."""
        if m < 0 or n < m:
            return IntPoly.zero()
        poch = QKitService.q_poch
        numerator = poch(PochSpec(sign=1, offset=s, step=s, length=n))
        denominator = poch(PochSpec(sign=1, offset=s, step=s, length=m)) * poch(
            PochSpec(sign=1, offset=s, step=s, length=n - m)
        )
        try:
            return numerator.divide_exact(denominator)
        except InexactDivision as exc:
            raise InternalInconsistency(f"q_binom({n}, {m}, {s}) quotient is not exact") from exc

    @staticmethod
    def q_binom_row(n: int) -> List[IntPoly]:
        """[n, 0], ..., [n, n] via [n, k] = [n, k-1] (1 - q^(n-k+1)) / (1 - q^k)."""
        row = [IntPoly.one()]
        for k in range(1, n + 1):
            row.append(row[-1].mul_one_minus_q_power(n - k + 1).div_one_minus_q_power(k))
        return row

    @staticmethod
    def q_modulus(p: int, k: int) -> QModulus:
        return QModulus(p, k)

    @staticmethod
    def q_poch_ratio(p: int, m: int) -> IntPoly:
        """(q^m;q^m)_{p-1} / (q;q)_{p-1} = prod_{j<p} [m]_{q^j}"""
        result = IntPoly.one()
        for j in range(1, p):
            result = result.mul_one_minus_q_power(j * m).div_one_minus_q_power(j)
        return result

    @staticmethod
    def q_fermat_quotient(p: int, m: int) -> RatFunc:
        """
        Q_p(m, q) = ((q^m;q^m)_{p-1} / (q;q)_{p-1} - 1) / [p]_q.

        The division by [p]_q is exact (the q-analogue of Fermat's little
        theorem), so the result is a polynomial; an inexact division is an
        internal error.
        """
        if p < 3 or not isprime(p):
            raise InvalidPrime(f"{p} is not an odd prime")
        if m < 1 or m % p == 0:
            raise PrimeDividesBase(f"q-Fermat quotient needs m >= 1 and p ∤ m, got p = {p}, m = {m}")
        ratio = QKitService.q_poch_ratio(p, m)
        try:
            quotient = (ratio - 1).div_qint(p)
        except InexactDivision as exc:
            raise InternalInconsistency(f"[{p}]_q does not divide the ratio minus one for m = {m}") from exc
        return RatFunc(quotient)

    @staticmethod
    def granville_exponent(p: int, m: int) -> int:
        """M = m * sum_{k<m} C(floor(kp/m) + 1, 2)"""
        if p < 5 or not isprime(p):
            raise InvalidPrime(f"{p} is not a prime >= 5")
        if m < 2:
            raise ValueError(f"m must be at least 2, got {m}")
        if m % p == 0:
            raise PrimeDividesBase(f"{p} divides {m}")
        return m * sum(comb(k * p // m + 1, 2) for k in range(1, m))

    # ------------------------------------------------------------------
    # Sums
    # ------------------------------------------------------------------

    @staticmethod
    def q_sum(spec: SumSpec, method: Optional[str] = None, threshold: Optional[int] = None) -> RatFunc:
        """Exact value of the sum described by ``spec`` (unnormalized)."""
        method = method or settings.SUM_METHOD
        if threshold is None:
            threshold = settings.NORMALIZE_FACTOR * 2 * (spec.p - 1)
        logger.debug(f"🔍 [QKIT] q_sum p={spec.p} weight={spec.weight.value} method={method}")
        if method == "termwise":
            return _termwise_sum(spec, threshold)
        if method != "horner":
            raise ValueError(f"unknown sum method {method!r}")
        if spec.inner is not None:
            return _nested_horner(spec)
        if spec.weight is SumWeight.POCH_PREFIX:
            return _poch_horner(spec)
        return _flat_horner(spec)


# ----------------------------------------------------------------------
# Sum internals
# ----------------------------------------------------------------------

def _coefficient(spec: SumSpec, j: int) -> int:
    c = -1 if spec.alternating and j % 2 else 1
    if spec.weight is SumWeight.FLOOR:
        c *= j * spec.m // spec.p
    return c


def _times_den(poly: IntPoly, spec: SumSpec, j: int) -> IntPoly:
    for _ in range(spec.power):
        poly = poly.mul_qint(spec.beta * j)
    return poly


def _den(spec: SumSpec, j: int) -> IntPoly:
    return _times_den(IntPoly.one(), spec, j)


def _flat_horner(spec: SumSpec) -> RatFunc:
    # acc / F runs over a single common denominator F = prod den_j
    acc, common = IntPoly.zero(), IntPoly.one()
    for j in range(1, spec.upper + 1):
        c = _coefficient(spec, j)
        if c == 0:
            continue
        acc = _times_den(acc, spec, j) + common.shift(spec.alpha * j).scale(c)
        common = _times_den(common, spec, j)
    return RatFunc(acc, common)


def _nested_horner(spec: SumSpec) -> RatFunc:
    # outer / F and inner / F share F = prod_{i<k} den_i
    inner = spec.inner
    acc, partial, common = IntPoly.zero(), IntPoly.zero(), IntPoly.one()
    for k in range(1, spec.upper + 1):
        outer_term = partial.shift(spec.alpha * k).scale(_coefficient(spec, k))
        acc = _times_den(acc, spec, k) + outer_term
        partial = _times_den(partial, spec, k) + common.shift(inner.alpha * k).scale(_coefficient(inner, k))
        common = _times_den(common, spec, k)
    return RatFunc(acc, common)


def _poch_factor(poly: IntPoly, spec: SumSpec, i: int) -> IntPoly:
    """poly * (+-1) q^alpha (1 + q^i), one step of the prefix product"""
    poly = poly.mul_binomial(-1, i).shift(spec.alpha)
    return -poly if spec.alternating else poly


def _poch_horner(spec: SumSpec) -> RatFunc:
    # sum_j (prod_{i<=j} r_i) / den_j = r_1 (1/den_1 + r_2 (1/den_2 + ...)),
    # evaluated from the innermost bracket outwards as T / G
    upper = spec.upper
    if upper == 0:
        return RatFunc(0)
    top, common = IntPoly.one(), _den(spec, upper)
    for j in range(upper - 1, 0, -1):
        top = common + _times_den(_poch_factor(top, spec, j + 1), spec, j)
        common = _times_den(common, spec, j)
    return RatFunc(_poch_factor(top, spec, 1), common)


def _termwise_sum(spec: SumSpec, threshold: int) -> RatFunc:
    total = RatFunc(0)
    inner_total = RatFunc(0)
    prefix = IntPoly.one()
    for j in range(1, spec.upper + 1):
        if spec.weight is SumWeight.POCH_PREFIX:
            prefix = _poch_factor(prefix, spec, j)
            term = RatFunc(prefix, _den(spec, j))
        else:
            c = _coefficient(spec, j)
            term = RatFunc(IntPoly.monomial(spec.alpha * j, c), _den(spec, j))
        if spec.inner is not None:
            total = (total + term * inner_total).settle(threshold)
            inner_c = _coefficient(spec.inner, j)
            inner_term = RatFunc(IntPoly.monomial(spec.inner.alpha * j, inner_c), _den(spec, j))
            inner_total = (inner_total + inner_term).settle(threshold)
        else:
            total = (total + term).settle(threshold)
    return total
