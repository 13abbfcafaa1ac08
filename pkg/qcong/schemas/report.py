"""Verification report schemas (versioned JSON)"""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class VerdictLabel(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not_applicable"
    ERROR = "error"


class CrossCheck(str, Enum):
    AGREE = "agree"
    DISAGREE = "disagree"
    SKIPPED = "skipped"


class InstanceRecord(BaseModel):
    """One (statement, p, m) instance"""
    id: str
    p: Optional[int] = None
    m: Optional[int] = None
    kind: str
    verdict: VerdictLabel
    oracle: CrossCheck = CrossCheck.SKIPPED
    limit_check: CrossCheck = CrossCheck.SKIPPED
    millis: float = Field(0.0, ge=0, description="wall time, excluded from determinism")
    note: Optional[str] = None


class Environment(BaseModel):
    package_version: str
    seed: int
    mul_algorithm: str
    normalize_factor: int
    oracle_prime_min: int
    oracle_prime_max: int


class ReportConfig(BaseModel):
    statements: List[str]
    primes: List[int]
    m_values: Optional[List[int]] = None
    oracle: bool
    oracle_primes: int
    limit: bool
    mutate: bool
    fail_fast: bool
    sum_method: str
    environment: Environment


class ReportSummary(BaseModel):
    total: int = 0
    holds: int = 0
    violated: int = 0
    not_applicable: int = 0
    error: int = 0
    oracle_disagree: int = 0
    limit_disagree: int = 0
    all_hold: bool = True
    truncated: bool = False
    total_millis: float = 0.0

    @classmethod
    def from_records(cls, records: List[InstanceRecord], truncated: bool = False) -> "ReportSummary":
        counts = {label: 0 for label in VerdictLabel}
        for record in records:
            counts[record.verdict] += 1
        return cls(
            total=len(records),
            holds=counts[VerdictLabel.HOLDS],
            violated=counts[VerdictLabel.VIOLATED],
            not_applicable=counts[VerdictLabel.NOT_APPLICABLE],
            error=counts[VerdictLabel.ERROR],
            oracle_disagree=sum(r.oracle is CrossCheck.DISAGREE for r in records),
            limit_disagree=sum(r.limit_check is CrossCheck.DISAGREE for r in records),
            all_hold=counts[VerdictLabel.VIOLATED] == 0 and counts[VerdictLabel.ERROR] == 0,
            truncated=truncated,
            total_millis=round(sum(r.millis for r in records), 3),
        )


class Report(BaseModel):
    version: int
    config: ReportConfig
    records: List[InstanceRecord]
    summary: ReportSummary

    def exit_code(self) -> int:
        """1 on any violation or q->1 disagreement, 2 on errors or oracle disagreement, else 0"""
        if self.summary.violated or self.summary.limit_disagree:
            return 1
        if self.summary.error or self.summary.oracle_disagree:
            return 2
        return 0
