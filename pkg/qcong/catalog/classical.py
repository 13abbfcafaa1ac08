"""Classical congruences between rationals, checked modulo powers of p"""
from fractions import Fraction
from math import comb, prod
from typing import Optional

from qcong.models.statement import Statement, StatementKind


def harmonic(n: int, power: int = 1) -> Fraction:
    return sum((Fraction(1, j**power) for j in range(1, n + 1)), Fraction(0))


def fermat_quotient(p: int, m: int) -> Fraction:
    """(m^(p-1) - 1) / p"""
    return Fraction(m ** (p - 1) - 1, p)


def coprime_base(p: Optional[int], m: Optional[int]) -> Optional[str]:
    if m < 1:
        return f"m must be positive, got {m}"
    if m % p == 0:
        return f"{p} divides m = {m}"
    return None


def granville_base(p: Optional[int], m: Optional[int]) -> Optional[str]:
    if m < 2:
        return f"m must be at least 2, got {m}"
    return coprime_base(p, m)


def _lehmer(p, m, ctx):
    q2 = fermat_quotient(p, 2)
    return harmonic((p - 1) // 2), -2 * q2 + q2 * q2 * p


def _wolstenholme(p, m, ctx):
    return harmonic(p - 1), Fraction(0)


def _morley(p, m, ctx):
    half = (p - 1) // 2
    return Fraction((-1) ** half * comb(p - 1, half)), Fraction(4 ** (p - 1))


def _granville(p, m, ctx):
    sign = (-1) ** ((p - 1) * (m - 1) // 2)
    product = prod(comb(p - 1, k * p // m) for k in range(1, m))
    return Fraction(sign * product), Fraction(m**p - m + 1)


def _lerch(p, m, ctx):
    floor_sum = sum((Fraction(j * m // p, j) for j in range(1, p)), Fraction(0))
    return Fraction(m**p - m, p), floor_sum


def _skula(p, m, ctx):
    q2 = fermat_quotient(p, 2)
    return q2 * q2, -sum((Fraction(2**j, j * j) for j in range(1, p)), Fraction(0))


def _glaisher(p, m, ctx):
    return fermat_quotient(p, 2), -sum((Fraction(2 ** (j - 1), j) for j in range(1, p)), Fraction(0))


def _fermat(p, m, ctx):
    return Fraction(m ** (p - 1)), Fraction(1)


CLASSICAL_STATEMENTS = [
    Statement(
        id="LEHMER",
        kind=StatementKind.CLASSICAL,
        title="sum_{j<=(p-1)/2} 1/j ≡ -2 Q_p(2) + Q_p(2)^2 p (mod p^2)",
        builder=_lehmer,
        exponent=2,
    ),
    Statement(
        id="WOLST",
        kind=StatementKind.CLASSICAL,
        title="sum_{j<p} 1/j ≡ 0 (mod p^2)",
        builder=_wolstenholme,
        exponent=2,
        min_prime=5,
    ),
    Statement(
        id="MORLEY",
        kind=StatementKind.CLASSICAL,
        title="(-1)^((p-1)/2) C(p-1, (p-1)/2) ≡ 4^(p-1) (mod p^3)",
        builder=_morley,
        exponent=3,
        min_prime=5,
    ),
    Statement(
        id="GRANVILLE",
        kind=StatementKind.CLASSICAL,
        title="(-1)^((p-1)(m-1)/2) prod_{k<m} C(p-1, floor(kp/m)) ≡ m^p - m + 1 (mod p^2)",
        builder=_granville,
        exponent=2,
        parameter="m",
        min_prime=5,
        guard=granville_base,
        default_params=(2, 3, 4),
    ),
    Statement(
        id="LERCH",
        kind=StatementKind.CLASSICAL,
        title="(m^p - m) / p ≡ sum_{j<p} floor(jm/p) / j (mod p)",
        builder=_lerch,
        exponent=1,
        parameter="m",
        guard=coprime_base,
        default_params=(2, 3),
    ),
    Statement(
        id="SKULA",
        kind=StatementKind.CLASSICAL,
        title="Q_p(2)^2 ≡ -sum_{j<p} 2^j / j^2 (mod p)",
        builder=_skula,
        exponent=1,
        min_prime=5,
        note="printed modulus is [p]_q; both sides are rationals, checked mod p",
    ),
    Statement(
        id="GLAISHER",
        kind=StatementKind.CLASSICAL,
        title="Q_p(2) ≡ -sum_{j<p} 2^(j-1) / j (mod p)",
        builder=_glaisher,
        exponent=1,
    ),
    Statement(
        id="FERMAT",
        kind=StatementKind.CLASSICAL,
        title="m^(p-1) ≡ 1 (mod p)",
        builder=_fermat,
        exponent=1,
        parameter="m",
        guard=coprime_base,
        default_params=(2, 3),
    ),
]
