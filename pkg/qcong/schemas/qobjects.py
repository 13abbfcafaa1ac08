"""Schemas describing q-Pochhammer products and harmonic-type q-sums"""
from enum import Enum
from math import gcd
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import isprime


class PochSpec(BaseModel):
    """prod_{j=0}^{n-1} (1 - c q^(e + j s))"""
    model_config = ConfigDict(frozen=True)

    sign: Literal[1, -1] = Field(..., description="c")
    offset: int = Field(..., ge=0, description="e, exponent of the first factor")
    step: int = Field(..., ge=1, description="s, exponent increment")
    length: int = Field(..., ge=0, description="n, number of factors")


class SumRange(str, Enum):
    FULL = "full"  # j = 1 .. p-1
    HALF = "half"  # j = 1 .. (p-1)/2


class SumWeight(str, Enum):
    UNIT = "unit"
    FLOOR = "floor"  # floor(j m / p)
    POCH_PREFIX = "poch_prefix"  # (-q;q)_j


class SumSpec(BaseModel):
    """
    sum_j  w_j (+-1)^j q^(alpha j) / [beta j]_q^power  over the selected range.

    With ``inner`` set, the sum is nested: each outer term is multiplied by the
    inner sum over indices strictly below the outer index.
    """
    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=2, description="prime bounding the summation range")
    index_range: SumRange = SumRange.FULL
    beta: int = Field(1, ge=1)
    power: Literal[1, 2] = 1
    alpha: int = Field(0, ge=0)
    alternating: bool = False
    weight: SumWeight = SumWeight.UNIT
    m: Optional[int] = Field(None, ge=1, description="multiplier of the floor weight")
    inner: Optional["SumSpec"] = None

    @model_validator(mode="after")
    def check_shape(self) -> "SumSpec":
        if not isprime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.index_range is SumRange.HALF and self.p == 2:
            raise ValueError("half range needs an odd prime")
        if self.weight is SumWeight.FLOOR:
            if self.m is None:
                raise ValueError("floor weight needs m")
            if gcd(self.m, self.p) != 1:
                raise ValueError(f"floor weight needs gcd(m, p) = 1, got m = {self.m}")
        if self.inner is not None:
            inner = self.inner
            if inner.inner is not None:
                raise ValueError("sums nest at most one level")
            if (inner.p, inner.index_range, inner.beta, inner.power) != (
                self.p, self.index_range, self.beta, self.power
            ):
                raise ValueError("inner sum must share p, range, beta and power")
            if SumWeight.POCH_PREFIX in (self.weight, inner.weight):
                raise ValueError("poch-prefix weight is not supported in nested sums")
        return self

    @property
    def upper(self) -> int:
        return self.p - 1 if self.index_range is SumRange.FULL else (self.p - 1) // 2


SumSpec.model_rebuild()
