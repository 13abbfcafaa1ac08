"""Verification run schemas"""
from enum import Enum
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import isprime

from qcong.catalog import CATALOG


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class VerifyOptions(BaseModel):
    """Per-instance switches, shipped to worker processes"""
    model_config = ConfigDict(frozen=True)

    oracle: bool = True
    oracle_primes: int = Field(3, ge=0, description="number of word-size primes per instance")
    limit: bool = True
    mutate: bool = False
    seed: int = 20240101
    sum_method: Literal["horner", "termwise"] = "horner"
    normalize_factor: int = Field(4, ge=1)


class RunConfig(BaseModel):
    """A resolved `verify` invocation"""
    statements: List[str] = Field(..., min_length=1)
    primes: List[int] = Field(..., min_length=1)
    m_values: Optional[List[int]] = None
    options: VerifyOptions = VerifyOptions()
    output_format: OutputFormat = OutputFormat.TABLE
    output: Optional[Path] = None
    jobs: int = Field(1, ge=1)
    fail_fast: bool = False

    @field_validator("statements", mode="before")
    @classmethod
    def expand_statements(cls, value):
        if isinstance(value, str):
            value = [value]
        ids: List[str] = []
        for item in value:
            if item.lower() == "all":
                ids.extend(CATALOG)
                continue
            key = item.strip().upper()
            if key not in CATALOG:
                raise ValueError(f"unknown statement id {item!r}")
            ids.append(key)
        # keep catalog order, drop duplicates
        return [sid for sid in CATALOG if sid in set(ids)]

    @field_validator("primes")
    @classmethod
    def sort_primes(cls, value: List[int]) -> List[int]:
        return sorted(set(value))

    @field_validator("m_values")
    @classmethod
    def sort_params(cls, value: Optional[List[int]]) -> Optional[List[int]]:
        return sorted(set(value)) if value is not None else None

    @model_validator(mode="after")
    def require_a_prime(self) -> "RunConfig":
        needs_prime = any(CATALOG[sid].uses_prime and CATALOG[sid].prime_only for sid in self.statements)
        if needs_prime and not any(isprime(p) for p in self.primes):
            raise ValueError("prime range contains no primes")
        return self
