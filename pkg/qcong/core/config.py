"""Application configuration using Pydantic Settings"""
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict

from qcong import __version__


class Settings(BaseSettings):
    """Engine settings, overridable through QCONG_* environment variables"""

    # App
    APP_NAME: str = "qcong"
    VERSION: str = __version__
    LOG_LEVEL: str = "WARNING"

    # Runner
    JOBS: int = 1  # QCONG_JOBS, default parallelism of `verify`
    SUM_METHOD: Literal["horner", "termwise"] = "horner"
    NORMALIZE_FACTOR: int = 4  # normalize when combined degree exceeds factor * modulus degree

    # Polynomial arithmetic
    MUL_ALGORITHM: Literal["schoolbook", "karatsuba", "kronecker"] = "kronecker"
    KARATSUBA_CUTOFF: int = 32  # below this length Karatsuba falls back to schoolbook
    KRONECKER_CUTOFF: int = 16  # below this length Kronecker packing is not worth it
    QBINOM_CROSS_CHECK: bool = False  # recompute every q-binomial by the quotient formula

    # Finite-field oracle
    ORACLE_SEED: int = 20240101
    ORACLE_PRIME_COUNT: int = 3
    ORACLE_PRIME_MIN: int = 2**16
    ORACLE_PRIME_MAX: int = 2**20  # residues squared must fit in int64
    ORACLE_RETRIES: int = 8

    # Reports
    REPORT_SCHEMA_VERSION: int = 1

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="QCONG_",
        case_sensitive=True,
        extra="ignore",
    )


settings = Settings()
