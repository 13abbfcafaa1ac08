"""Outcome of a single check"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from qcong.models.polynomial import IntPoly
from qcong.models.ratfunc import RatFunc


@dataclass(frozen=True)
class Failure:
    remainder: Optional[IntPoly]
    stage: str  # divisibility | identity | classical


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[Union[RatFunc, Fraction]] = None
    failure: Optional[Failure] = None

    def __post_init__(self):
        if (self.witness is None) == (self.failure is None):
            raise ValueError("a verdict carries exactly one of witness / failure")

    def __bool__(self) -> bool:
        return self.holds
