"""Exact polynomial identities"""
from math import comb

from qcong.models.polynomial import IntPoly
from qcong.models.ratfunc import RatFunc
from qcong.models.statement import Statement, StatementKind
from qcong.schemas.qobjects import PochSpec
from qcong.services.qkit_service import QKitService


def _nonnegative(p, n):
    return None if n >= 0 else f"parameter must be non-negative, got {n}"


def _positive(p, n):
    return None if n >= 1 else f"parameter must be positive, got {n}"


def _l22(p, k, ctx):
    # q^(kp) = sum_j (-1)^j C(k, j) ((1-q)[p]_q)^j
    x = IntPoly([1, -1]) * QKitService.q_int(p)
    rhs, power = IntPoly.zero(), IntPoly.one()
    for j in range(k + 1):
        rhs = rhs + power.scale((-1) ** j * comb(k, j))
        if j < k:
            power = power * x
    return RatFunc(IntPoly.monomial(k * p)), RatFunc(rhs)


def _l52(p, n, ctx):
    # X_k = [n, k] (-q;q)_k, built one factor at a time
    lhs, term = IntPoly.zero(), IntPoly.one()
    for k in range(n + 1):
        if k:
            term = term.mul_one_minus_q_power(n - k + 1).mul_binomial(-1, k).div_one_minus_q_power(k)
        piece = term.shift(comb(n - k, 2))
        lhs = lhs - piece if k % 2 else lhs + piece
    rhs = IntPoly.monomial(comb(n + 1, 2), (-1) ** n)
    return RatFunc(lhs), RatFunc(rhs)


def _l54(p, n, ctx):
    # both sides over D_n = [1]_q [2]_q ... [n]_q
    # lhs: acc_k = acc_{k-1} [k] + (-1)^k q^C(n-k,2) Z_k / [k],  Z_k = Z_{k-1} (1 + q^k) [n-k+1]
    lhs, z = IntPoly.zero(), IntPoly.one()
    for k in range(1, n + 1):
        z = z.mul_binomial(-1, k).mul_qint(n - k + 1)
        term = z.div_qint(k).shift(comb(n - k, 2))
        lhs = lhs.mul_qint(k) + (-term if k % 2 else term)
    # rhs: q^C(n,2) sum_k ((-q)^k - 1) / [k]
    rhs, factorial = IntPoly.zero(), IntPoly.one()
    for k in range(1, n + 1):
        numerator = IntPoly.monomial(k, (-1) ** k) - 1
        rhs = rhs.mul_qint(k) + numerator * factorial
        factorial = factorial.mul_qint(k)
    return RatFunc(lhs, factorial), RatFunc(rhs.shift(comb(n, 2)), factorial)


def _qbt(p, n, ctx):
    # (-1;q)_n = sum_j [n, j] q^C(j,2)
    lhs = QKitService.q_poch(PochSpec(sign=-1, offset=0, step=1, length=n))
    rhs = IntPoly.zero()
    for j, binom in enumerate(QKitService.q_binom_row(n)):
        rhs = rhs + binom.shift(comb(j, 2))
    return RatFunc(lhs), RatFunc(rhs)


IDENTITIES = [
    Statement(
        id="L22",
        kind=StatementKind.IDENTITY,
        title="q^(kp) = sum_{j<=k} (-1)^j C(k,j) (1-q)^j [p]_q^j",
        builder=_l22,
        parameter="k",
        prime_only=False,
        min_prime=2,
        guard=_positive,
        default_params=(1, 2, 3, 4, 5),
    ),
    Statement(
        id="L52",
        kind=StatementKind.IDENTITY,
        title="sum_{k<=n} (-1)^k [n,k]_q q^C(n-k,2) (-q;q)_k = (-1)^n q^C(n+1,2)",
        builder=_l52,
        parameter="n",
        uses_prime=False,
        guard=_nonnegative,
        default_params=tuple(range(1, 11)),
    ),
    Statement(
        id="L54",
        kind=StatementKind.IDENTITY,
        title="sum_{k=1}^n (-1)^k [n,k]_q q^C(n-k,2) (-q;q)_k/[k]_q = q^C(n,2) sum_{k=1}^n ((-q)^k - 1)/[k]_q",
        builder=_l54,
        parameter="n",
        uses_prime=False,
        guard=_nonnegative,
        default_params=tuple(range(1, 11)),
    ),
    Statement(
        id="QBT",
        kind=StatementKind.IDENTITY,
        title="(-1;q)_n = sum_{j<=n} [n,j]_q q^C(j,2)",
        builder=_qbt,
        parameter="n",
        uses_prime=False,
        guard=_nonnegative,
        default_params=tuple(range(1, 11)),
    ),
]
