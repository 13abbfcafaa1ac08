"""Catalogued statements and their materialized sides"""
from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Tuple, Union

from sympy import isprime

from qcong.core.config import settings
from qcong.core.exceptions import NotApplicable
from qcong.models.modulus import QModulus
from qcong.models.ratfunc import RatFunc
from qcong.schemas.qobjects import SumSpec
from qcong.services.qkit_service import QKitService

Side = Union[RatFunc, Fraction]


class StatementKind(str, Enum):
    Q_CONGRUENCE = "q-congruence"
    IDENTITY = "exact-identity"
    CLASSICAL = "classical"


@dataclass(frozen=True)
class BuildContext:
    """Per-run knobs the builders need"""
    sum_method: str = "horner"
    normalize_factor: int = 4
    modulus_degree: int = 0

    @classmethod
    def from_settings(cls) -> "BuildContext":
        return cls(sum_method=settings.SUM_METHOD, normalize_factor=settings.NORMALIZE_FACTOR)

    def q_sum(self, spec: SumSpec) -> RatFunc:
        threshold = self.normalize_factor * max(self.modulus_degree, spec.p - 1)
        return QKitService.q_sum(spec, method=self.sum_method, threshold=threshold)


@dataclass(frozen=True)
class BuiltStatement:
    """Materialized sides; ``modulus`` for q-congruences, ``exponent`` for classical ones"""
    statement_id: str
    kind: StatementKind
    lhs: Side
    rhs: Side
    modulus: Optional[QModulus] = None
    p: Optional[int] = None
    exponent: Optional[int] = None


Builder = Callable[[Optional[int], Optional[int], BuildContext], Tuple[Side, Side]]
Guard = Callable[[Optional[int], Optional[int]], Optional[str]]
LimitSides = Callable[[int, Optional[int]], Tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class Statement:
    id: str
    kind: StatementKind
    title: str
    builder: Builder
    exponent: Optional[int] = None  # k of [p]_q^k or p^k; None for identities
    parameter: Optional[str] = None  # name of the free parameter (m, k or n)
    uses_prime: bool = True
    prime_only: bool = True  # False: any integer p >= 2 is allowed
    min_prime: int = 3
    guard: Optional[Guard] = None  # extra applicability rule, returns a reason
    companion: Optional[str] = None
    companion_exponent: Optional[int] = None  # defaults to the companion's own exponent
    limit_sides: Optional[LimitSides] = None  # defaults to the companion's sides
    default_params: Tuple[int, ...] = ()
    note: Optional[str] = None

    def applicability(self, p: Optional[int], m: Optional[int]) -> Optional[str]:
        """None when (p, m) is admissible, otherwise the reason it is not"""
        if self.uses_prime:
            if p is None:
                return "a prime is required"
            if self.prime_only and not isprime(p):
                return f"{p} is not prime"
            if p < self.min_prime:
                return f"needs p >= {self.min_prime}"
        if self.parameter is not None and m is None:
            return f"parameter {self.parameter} is required"
        if self.guard is not None:
            return self.guard(p, m)
        return None

    def build(self, p: Optional[int], m: Optional[int], ctx: Optional[BuildContext] = None) -> BuiltStatement:
        reason = self.applicability(p, m)
        if reason is not None:
            raise NotApplicable(f"{self.id}(p={p}, {self.parameter or 'm'}={m}): {reason}")
        ctx = ctx or BuildContext.from_settings()
        modulus = None
        if self.kind is StatementKind.Q_CONGRUENCE:
            modulus = QModulus(p, self.exponent)
            ctx = replace(ctx, modulus_degree=modulus.degree)
        lhs, rhs = self.builder(p, m, ctx)
        return BuiltStatement(
            statement_id=self.id,
            kind=self.kind,
            lhs=lhs,
            rhs=rhs,
            modulus=modulus,
            p=p,
            exponent=self.exponent,
        )

    def describe_modulus(self) -> str:
        if self.kind is StatementKind.Q_CONGRUENCE:
            return f"[p]_q^{self.exponent}"
        if self.kind is StatementKind.CLASSICAL:
            return f"p^{self.exponent}"
        return "="
