"""Acceptance sweep: runs the full verification ranges and writes one JSON report per criterion.

Usage:
    python -m scripts.acceptance_sweep [OUTPUT_DIR] [JOBS]
"""
import logging
import sys
from pathlib import Path

from sympy import primerange

from qcong.core.config import settings
from qcong.schemas.run_config import OutputFormat, RunConfig, VerifyOptions
from qcong.services.report_service import ReportService
from qcong.services.theorem_service import TheoremService

logger = logging.getLogger(__name__)


def _primes(low: int, high: int):
    return list(primerange(low, high + 1))


CRITERIA = [
    {"name": "fltq", "statements": ["FLTQ"], "primes": _primes(3, 61), "m": list(range(1, 21))},
    {"name": "wolstenholme_lehmer", "statements": ["WOLSTQ", "LEHMERQ", "HALFQ"], "primes": _primes(3, 199)},
    {"name": "morley", "statements": ["MORLEYQ"], "primes": _primes(5, 101)},
    {"name": "granville", "statements": ["GRANVILLEQ"], "primes": _primes(5, 61), "m": list(range(2, 11))},
    {"name": "lemma_l21a", "statements": ["L21A"], "primes": _primes(3, 199)},
    {"name": "lemmas", "statements": ["L21B", "L21C", "L23", "L24", "E27", "T51", "C53"], "primes": _primes(5, 101)},
    {"name": "c24", "statements": ["C24"], "primes": _primes(3, 61), "m": list(range(1, 11))},
    {"name": "lerch", "statements": ["L41"], "primes": _primes(3, 101), "m": list(range(1, 11))},
    {"name": "identity_l22", "statements": ["L22"], "primes": list(range(2, 51)), "m": list(range(1, 51))},
    {"name": "identities", "statements": ["L52", "L54", "QBT"], "primes": [3], "m": list(range(0, 201))},
    {"name": "classical", "statements": ["LEHMER", "WOLST", "MORLEY", "SKULA", "GLAISHER"], "primes": _primes(3, 199)},
]


def run(output_dir: Path, jobs: int) -> int:
    output_dir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for criterion in CRITERIA:
        config = RunConfig(
            statements=criterion["statements"],
            primes=criterion["primes"],
            m_values=criterion.get("m"),
            options=VerifyOptions(
                oracle_primes=settings.ORACLE_PRIME_COUNT,
                seed=settings.ORACLE_SEED,
                sum_method=settings.SUM_METHOD,
                normalize_factor=settings.NORMALIZE_FACTOR,
            ),
            jobs=jobs,
        )
        report = TheoremService.verify_range(config)
        ReportService.write(report, OutputFormat.JSON, output_dir / f"{criterion['name']}.json")
        code = report.exit_code()
        summary = report.summary
        marker = "✅" if code == 0 else "❌"
        print(
            f"{marker} {criterion['name']}: {summary.holds} hold, {summary.violated} violated, "
            f"{summary.error} errors, {summary.not_applicable} n/a ({summary.total_millis / 1000:.1f}s)"
        )
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    logging.basicConfig(level=settings.LOG_LEVEL)
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("acceptance-reports")
    workers = int(sys.argv[2]) if len(sys.argv) > 2 else settings.JOBS
    sys.exit(run(target, workers))
