"""q-congruences modulo powers of [p]_q"""
from fractions import Fraction
from math import comb

from qcong.catalog.classical import coprime_base, fermat_quotient, granville_base, harmonic
from qcong.models.polynomial import IntPoly
from qcong.models.ratfunc import RatFunc
from qcong.models.statement import Statement, StatementKind
from qcong.schemas.qobjects import PochSpec, SumRange, SumSpec, SumWeight
from qcong.services.qkit_service import QKitService

ONE_MINUS_Q = IntPoly([1, -1])


def _fermat_q2(p: int) -> IntPoly:
    return QKitService.q_fermat_quotient(p, 2).num


def _half_sum(p: int, ctx) -> RatFunc:
    """sum_{j<=(p-1)/2} 1/[2j]_q"""
    return ctx.q_sum(SumSpec(p=p, index_range=SumRange.HALF, beta=2))


def _wolstenholme_rhs(p: int) -> RatFunc:
    u = ONE_MINUS_Q
    return RatFunc.combine([
        (Fraction(p - 1, 2), u),
        (Fraction(p * p - 1, 24), u * u * QKitService.q_int(p)),
    ])


# -- theorems ----------------------------------------------------------------

def _fltq(p, m, ctx):
    poch = QKitService.q_poch
    lhs = RatFunc(
        poch(PochSpec(sign=1, offset=m, step=m, length=p - 1)),
        poch(PochSpec(sign=1, offset=1, step=1, length=p - 1)),
    )
    return lhs, RatFunc(1)


def _wolstq(p, m, ctx):
    return ctx.q_sum(SumSpec(p=p)), _wolstenholme_rhs(p)


def _lehmerq(p, m, ctx):
    u, big_p, q2 = ONE_MINUS_Q, QKitService.q_int(p), _fermat_q2(p)
    lhs = _half_sum(p, ctx).scale(2) + RatFunc(q2.scale(2) - q2 * q2 * big_p)
    rhs = RatFunc.combine([
        (1, q2 * u * big_p),
        (Fraction(p * p - 1, 8), u * u * big_p),
    ])
    return lhs, rhs


def _lehmer_limit(p, m):
    q2 = fermat_quotient(p, 2)
    return harmonic((p - 1) // 2) + 2 * q2 - q2 * q2 * p, Fraction(0)


def _halfq(p, m, ctx):
    return _half_sum(p, ctx).scale(2) + RatFunc(_fermat_q2(p).scale(2)), RatFunc(0)


def _half_limit(p, m):
    return harmonic((p - 1) // 2) + 2 * fermat_quotient(p, 2), Fraction(0)


def _morleyq(p, m, ctx):
    half = (p - 1) // 2
    lhs = QKitService.q_binom(p - 1, half, 2).shift((p * p - 1) // 4).scale((-1) ** half)
    poch = QKitService.q_poch(PochSpec(sign=-1, offset=1, step=1, length=p - 1))
    big_p = QKitService.q_int(p)
    rhs = RatFunc.combine([
        (1, poch * poch),
        (-Fraction(p * p - 1, 24), (ONE_MINUS_Q * big_p) ** 2),
    ])
    return RatFunc(lhs), rhs


def _granvilleq(p, m, ctx):
    sign = (-1) ** ((p - 1) * (m - 1) // 2)
    product = IntPoly.one()
    for k in range(1, m):
        product = product * QKitService.q_binom(p - 1, k * p // m, m)
    lhs = product.shift(QKitService.granville_exponent(p, m)).scale(sign)
    ratio = QKitService.q_poch_ratio(p, m)
    return RatFunc(lhs), RatFunc(ratio.scale(m) - (m - 1))


# -- lemmas --------------------------------------------------------------------

def _l21a(p, m, ctx):
    return ctx.q_sum(SumSpec(p=p)), RatFunc.combine([(Fraction(p - 1, 2), ONE_MINUS_Q)])


def _l21b(p, m, ctx):
    u = ONE_MINUS_Q
    lhs = ctx.q_sum(SumSpec(p=p, alpha=1, power=2))
    return lhs, RatFunc.combine([(-Fraction(p * p - 1, 12), u * u)])


def _l21c(p, m, ctx):
    u = ONE_MINUS_Q
    lhs = ctx.q_sum(SumSpec(p=p, power=2))
    return lhs, RatFunc.combine([(-Fraction((p - 1) * (p - 5), 12), u * u)])


def _c24(p, k, ctx):
    x = ONE_MINUS_Q * QKitService.q_int(p)
    rhs = IntPoly.one() - x.scale(k) + (x * x).scale(comb(k, 2))
    return RatFunc(IntPoly.monomial(k * p)), RatFunc(rhs)


def _l23(p, m, ctx):
    u = ONE_MINUS_Q
    nested = SumSpec(p=p, alternating=True, inner=SumSpec(p=p))
    alternating = ctx.q_sum(SumSpec(p=p, alternating=True))
    lhs = ctx.q_sum(nested).scale(4)
    rhs = alternating * (alternating + RatFunc(u.scale(p - 3))) + RatFunc.combine(
        [(Fraction((p - 1) * (p + 7), 12), u * u)]
    )
    return lhs, rhs


def _l24(p, m, ctx):
    lhs = ctx.q_sum(SumSpec(p=p, alternating=True))
    return lhs, _half_sum(p, ctx).scale(2) - _wolstenholme_rhs(p)


def _e27(p, m, ctx):
    u = ONE_MINUS_Q
    lhs = RatFunc.combine([(-Fraction(p * p - 1, 12), u * u)])
    rhs = ctx.q_sum(SumSpec(p=p, index_range=SumRange.HALF, beta=2, alpha=2, power=2)).scale(2)
    return lhs, rhs


def _l41(p, m, ctx):
    floor_sum = ctx.q_sum(SumSpec(p=p, beta=m, weight=SumWeight.FLOOR, m=m))
    rhs = floor_sum - RatFunc.combine([(Fraction((p - 1) * (m - 1), 2), ONE_MINUS_Q)])
    return QKitService.q_fermat_quotient(p, m), rhs


def _l41_limit(p, m):
    floor_sum = sum((Fraction(j * m // p, j * m) for j in range(1, p)), Fraction(0))
    return fermat_quotient(p, m), floor_sum


def _t51(p, m, ctx):
    u, q2 = ONE_MINUS_Q, _fermat_q2(p)
    lhs = ctx.q_sum(SumSpec(p=p, alpha=1, power=2, weight=SumWeight.POCH_PREFIX)) + RatFunc(q2 * q2)
    rhs = RatFunc.combine([
        (-(p - 1), q2 * u),
        (-Fraction((7 * p - 5) * (p - 1), 24), u * u),
    ])
    return lhs, rhs


def _t51_limit(p, m):
    q2 = fermat_quotient(p, 2)
    return sum((Fraction(2**j, j * j) for j in range(1, p)), Fraction(0)) + q2 * q2, Fraction(0)


def _c53(p, m, ctx):
    lhs = ctx.q_sum(SumSpec(p=p, alpha=1, weight=SumWeight.POCH_PREFIX))
    rhs = RatFunc(_fermat_q2(p).scale(-2) - ONE_MINUS_Q.scale(p - 1))
    return lhs, rhs


def _c53_limit(p, m):
    return sum((Fraction(2**j, j) for j in range(1, p)), Fraction(0)), -2 * fermat_quotient(p, 2)


def _positive_k(p, k):
    return None if k >= 1 else f"k must be positive, got {k}"


Q_CONGRUENCES = [
    Statement(
        id="FLTQ",
        kind=StatementKind.Q_CONGRUENCE,
        title="(q^m;q^m)_{p-1} / (q;q)_{p-1} ≡ 1 (mod [p]_q)",
        builder=_fltq,
        exponent=1,
        parameter="m",
        guard=coprime_base,
        companion="FERMAT",
        default_params=(1, 2, 3),
    ),
    Statement(
        id="WOLSTQ",
        kind=StatementKind.Q_CONGRUENCE,
        title="sum_{j<p} 1/[j]_q ≡ (p-1)/2 (1-q) + (p^2-1)/24 (1-q)^2 [p]_q (mod [p]_q^2)",
        builder=_wolstq,
        exponent=2,
        companion="WOLST",
    ),
    Statement(
        id="LEHMERQ",
        kind=StatementKind.Q_CONGRUENCE,
        title="2 sum 1/[2j]_q + 2 Q_p(2,q) - Q_p(2,q)^2 [p]_q ≡ (Q_p(2,q)(1-q) + (p^2-1)/8 (1-q)^2) [p]_q (mod [p]_q^2)",
        builder=_lehmerq,
        exponent=2,
        companion="LEHMER",
        limit_sides=_lehmer_limit,
    ),
    Statement(
        id="HALFQ",
        kind=StatementKind.Q_CONGRUENCE,
        title="2 sum_{j<=(p-1)/2} 1/[2j]_q ≡ -2 Q_p(2,q) (mod [p]_q)",
        builder=_halfq,
        exponent=1,
        companion="LEHMER",
        companion_exponent=1,
        limit_sides=_half_limit,
    ),
    Statement(
        id="MORLEYQ",
        kind=StatementKind.Q_CONGRUENCE,
        title="(-1)^((p-1)/2) q^((p^2-1)/4) [p-1, (p-1)/2]_{q^2} ≡ (-q;q)_{p-1}^2 - (p^2-1)/24 (1-q)^2 [p]_q^2 (mod [p]_q^3)",
        builder=_morleyq,
        exponent=3,
        min_prime=5,
        companion="MORLEY",
    ),
    Statement(
        id="GRANVILLEQ",
        kind=StatementKind.Q_CONGRUENCE,
        title="(-1)^((p-1)(m-1)/2) q^M prod_{k<m} [p-1, floor(kp/m)]_{q^m} ≡ m (q^m;q^m)_{p-1}/(q;q)_{p-1} - m + 1 (mod [p]_q^2)",
        builder=_granvilleq,
        exponent=2,
        parameter="m",
        min_prime=5,
        guard=granville_base,
        companion="GRANVILLE",
        default_params=(2, 3, 4),
    ),
    Statement(
        id="L21A",
        kind=StatementKind.Q_CONGRUENCE,
        title="sum_{j<p} 1/[j]_q ≡ (p-1)/2 (1-q) (mod [p]_q)",
        builder=_l21a,
        exponent=1,
        companion="WOLST",
        companion_exponent=1,
    ),
    Statement(
        id="L21B",
        kind=StatementKind.Q_CONGRUENCE,
        title="sum_{j<p} q^j/[j]_q^2 ≡ -(p^2-1)/12 (1-q)^2 (mod [p]_q)",
        builder=_l21b,
        exponent=1,
        min_prime=5,
    ),
    Statement(
        id="L21C",
        kind=StatementKind.Q_CONGRUENCE,
        title="sum_{j<p} 1/[j]_q^2 ≡ -(p-1)(p-5)/12 (1-q)^2 (mod [p]_q)",
        builder=_l21c,
        exponent=1,
        min_prime=5,
    ),
    Statement(
        id="C24",
        kind=StatementKind.Q_CONGRUENCE,
        title="q^(kp) ≡ 1 - k(1-q)[p]_q + C(k,2)(1-q)^2[p]_q^2 (mod [p]_q^3)",
        builder=_c24,
        exponent=3,
        parameter="k",
        guard=_positive_k,
        default_params=(1, 2, 3, 4, 5),
    ),
    Statement(
        id="L23",
        kind=StatementKind.Q_CONGRUENCE,
        title="4 sum_{j<k<p} (-1)^k/([j]_q[k]_q) ≡ S^2 + (p-3)(1-q) S + (p-1)(p+7)/12 (1-q)^2 (mod [p]_q)",
        builder=_l23,
        exponent=1,
        min_prime=5,
    ),
    Statement(
        id="L24",
        kind=StatementKind.Q_CONGRUENCE,
        title="sum_{j<p} (-1)^j/[j]_q ≡ 2 sum 1/[2j]_q - (p-1)/2 (1-q) - (p^2-1)/24 (1-q)^2 [p]_q (mod [p]_q^2)",
        builder=_l24,
        exponent=2,
        min_prime=5,
    ),
    Statement(
        id="E27",
        kind=StatementKind.Q_CONGRUENCE,
        title="-(p^2-1)/12 (1-q)^2 ≡ 2 sum_{j<=(p-1)/2} q^(2j)/[2j]_q^2 (mod [p]_q)",
        builder=_e27,
        exponent=1,
        min_prime=5,
    ),
    Statement(
        id="L41",
        kind=StatementKind.Q_CONGRUENCE,
        title="Q_p(m,q) ≡ sum_{j<p} floor(jm/p)/[jm]_q - (p-1)(m-1)/2 (1-q) (mod [p]_q)",
        builder=_l41,
        exponent=1,
        parameter="m",
        guard=coprime_base,
        companion="LERCH",
        limit_sides=_l41_limit,
        default_params=(1, 2, 3),
    ),
    Statement(
        id="T51",
        kind=StatementKind.Q_CONGRUENCE,
        title="sum_{j<p} q^j(-q;q)_j/[j]_q^2 + Q_p(2,q)^2 ≡ -(p-1) Q_p(2,q)(1-q) - (7p-5)(p-1)/24 (1-q)^2 (mod [p]_q)",
        builder=_t51,
        exponent=1,
        min_prime=5,
        companion="SKULA",
        limit_sides=_t51_limit,
    ),
    Statement(
        id="C53",
        kind=StatementKind.Q_CONGRUENCE,
        title="sum_{j<p} q^j(-q;q)_j/[j]_q ≡ -2 Q_p(2,q) - (p-1)(1-q) (mod [p]_q)",
        builder=_c53,
        exponent=1,
        companion="GLAISHER",
        limit_sides=_c53_limit,
    ),
]
