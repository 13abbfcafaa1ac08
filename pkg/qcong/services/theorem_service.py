"""Statement verification and sweep runner"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from sympy import isprime

from qcong.catalog import CATALOG, get_statement
from qcong.core.config import settings
from qcong.core.exceptions import BadOraclePrime, NotApplicable, QCongException
from qcong.models.polynomial import IntPoly
from qcong.models.ratfunc import RatFunc
from qcong.models.statement import BuildContext, BuiltStatement, Statement, StatementKind
from qcong.models.verdict import Failure, Verdict
from qcong.schemas.report import (
    CrossCheck,
    Environment,
    InstanceRecord,
    Report,
    ReportConfig,
    ReportSummary,
    VerdictLabel,
)
from qcong.schemas.run_config import RunConfig, VerifyOptions
from qcong.services.congruence_service import CongruenceService
from qcong.services.qkit_service import QKitService

logger = logging.getLogger(__name__)

Instance = Tuple[str, Optional[int], Optional[int]]


@dataclass(frozen=True)
class StatementCheck:
    """Verdict of one instance plus its cross-checks"""
    verdict: Verdict
    oracle: CrossCheck = CrossCheck.SKIPPED
    limit_check: CrossCheck = CrossCheck.SKIPPED
    notes: Tuple[str, ...] = ()


def default_options() -> VerifyOptions:
    return VerifyOptions(
        oracle_primes=settings.ORACLE_PRIME_COUNT,
        seed=settings.ORACLE_SEED,
        sum_method=settings.SUM_METHOD,
        normalize_factor=settings.NORMALIZE_FACTOR,
    )


class TheoremService:
    """Instantiate, check and cross-check catalogued statements"""

    @staticmethod
    def build_statement(
        statement_id: str,
        p: Optional[int],
        m: Optional[int] = None,
        ctx: Optional[BuildContext] = None,
    ) -> BuiltStatement:
        return get_statement(statement_id).build(p, m, ctx)

    @staticmethod
    def mutate(built: BuiltStatement) -> BuiltStatement:
        """
        Perturb the RHS so that a correct checker must reject the instance:
        + (1-q)[p]_q^(k-1) for q-congruences, + (1-q) for identities,
        + p^(k-1) for classical congruences.
        """
        if built.kind is StatementKind.Q_CONGRUENCE:
            modulus = built.modulus
            shift = IntPoly([1, -1]) * QKitService.q_int(modulus.p) ** (modulus.k - 1)
            return replace(built, rhs=built.rhs + RatFunc(shift))
        if built.kind is StatementKind.IDENTITY:
            return replace(built, rhs=built.rhs + RatFunc(IntPoly([1, -1])))
        return replace(built, rhs=built.rhs + Fraction(built.p ** (built.exponent - 1)))

    @staticmethod
    def decide(built: BuiltStatement) -> Verdict:
        """Dispatch over the statement kind"""
        if built.kind is StatementKind.Q_CONGRUENCE:
            return CongruenceService.check_congruence(built.lhs, built.rhs, built.modulus)
        if built.kind is StatementKind.IDENTITY:
            if CongruenceService.check_identity(built.lhs, built.rhs):
                return Verdict(holds=True, witness=RatFunc(0))
            difference = built.lhs - built.rhs
            return Verdict(holds=False, failure=Failure(remainder=difference.num, stage="identity"))
        holds = CongruenceService.classical_check(built.lhs, built.rhs, built.p, built.exponent)
        if holds:
            return Verdict(holds=True, witness=(built.lhs - built.rhs) / built.p ** built.exponent)
        return Verdict(holds=False, failure=Failure(remainder=None, stage="classical"))

    @staticmethod
    def verify_statement(
        statement_id: str,
        p: Optional[int],
        m: Optional[int] = None,
        options: Optional[VerifyOptions] = None,
    ) -> StatementCheck:
        options = options or default_options()
        statement = get_statement(statement_id)
        ctx = BuildContext(sum_method=options.sum_method, normalize_factor=options.normalize_factor)
        built = statement.build(p, m, ctx)
        if options.mutate:
            built = TheoremService.mutate(built)

        verdict = TheoremService.decide(built)
        notes: List[str] = [statement.note] if statement.note else []

        oracle = CrossCheck.SKIPPED
        if options.oracle and options.oracle_primes and built.kind is StatementKind.Q_CONGRUENCE:
            oracle = TheoremService._run_oracle(statement, built, verdict, m, options, notes)

        limit = CrossCheck.SKIPPED
        if options.limit and statement.companion:
            limit = TheoremService._run_limit(statement, built, p, m, notes)

        return StatementCheck(verdict=verdict, oracle=oracle, limit_check=limit, notes=tuple(notes))

    @staticmethod
    def _run_oracle(
        statement: Statement,
        built: BuiltStatement,
        verdict: Verdict,
        m: Optional[int],
        options: VerifyOptions,
        notes: List[str],
    ) -> CrossCheck:
        primes = CongruenceService.oracle_primes(options.seed, statement.id, built.p, m, options.oracle_primes)
        try:
            for ell in primes:
                if CongruenceService.modular_oracle(built.lhs, built.rhs, built.modulus, ell) != verdict.holds:
                    logger.warning(f"⚠️ [ORACLE] {statement.id} p={built.p} m={m}: disagreement mod {ell}")
                    notes.append(f"oracle disagrees mod {ell}")
                    return CrossCheck.DISAGREE
        except BadOraclePrime as exc:
            notes.append(str(exc))
            return CrossCheck.SKIPPED
        return CrossCheck.AGREE

    @staticmethod
    def _run_limit(
        statement: Statement,
        built: BuiltStatement,
        p: Optional[int],
        m: Optional[int],
        notes: List[str],
    ) -> CrossCheck:
        companion = get_statement(statement.companion)
        if companion.applicability(p, m) is not None:
            return CrossCheck.SKIPPED
        classical = companion.build(p, m)
        if statement.limit_sides is not None:
            sides = statement.limit_sides(p, m)
        else:
            sides = (classical.lhs, classical.rhs)
        try:
            agrees = CongruenceService.q_limit_check(built.lhs, built.rhs, *sides)
        except QCongException as exc:
            notes.append(f"q->1: {exc}")
            return CrossCheck.DISAGREE
        if not agrees:
            notes.append(f"q->1 values differ from {companion.id}")
            return CrossCheck.DISAGREE
        exponent = statement.companion_exponent or companion.exponent
        if not CongruenceService.classical_check(classical.lhs, classical.rhs, p, exponent):
            notes.append(f"{companion.id} fails mod p^{exponent}")
            return CrossCheck.DISAGREE
        return CrossCheck.AGREE

    # ------------------------------------------------------------------
    # Sweeps
    # ------------------------------------------------------------------

    @staticmethod
    def enumerate_instances(config: RunConfig) -> Iterator[Instance]:
        """Catalog order, then p ascending, then parameter ascending"""
        for statement_id in config.statements:
            statement = CATALOG[statement_id]
            if statement.parameter is None:
                params: List[Optional[int]] = [None]
            elif config.m_values is not None:
                params = list(config.m_values)
            else:
                params = list(statement.default_params)
            primes: List[Optional[int]] = list(config.primes) if statement.uses_prime else [None]
            for p in primes:
                if statement.uses_prime and statement.prime_only and not isprime(p):
                    continue
                for m in params:
                    yield statement_id, p, m

    @staticmethod
    def verify_range(config: RunConfig) -> Report:
        instances = list(TheoremService.enumerate_instances(config))
        logger.info(f"🚀 [RUNNER] {len(instances)} instances, jobs={config.jobs}")
        records: List[InstanceRecord] = []

        if config.jobs > 1:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                futures = [pool.submit(run_instance, *instance, config.options) for instance in instances]
                for future in futures:
                    records.append(future.result())
                    if config.fail_fast and records[-1].verdict is VerdictLabel.VIOLATED:
                        for pending in futures:
                            pending.cancel()
                        break
        else:
            for instance in instances:
                records.append(run_instance(*instance, config.options))
                if config.fail_fast and records[-1].verdict is VerdictLabel.VIOLATED:
                    break

        truncated = len(records) < len(instances)
        summary = ReportSummary.from_records(records, truncated=truncated)
        if summary.all_hold:
            logger.info(f"✅ [RUNNER] {summary.holds} hold, {summary.not_applicable} not applicable")
        else:
            logger.warning(f"❌ [RUNNER] {summary.violated} violated, {summary.error} errors")
        return Report(
            version=settings.REPORT_SCHEMA_VERSION,
            config=_report_config(config),
            records=records,
            summary=summary,
        )


def run_instance(
    statement_id: str,
    p: Optional[int],
    m: Optional[int],
    options: VerifyOptions,
) -> InstanceRecord:
    """Check one instance; never raises."""
    statement = CATALOG[statement_id]
    started = time.perf_counter()
    base = {"id": statement_id, "p": p, "m": m, "kind": statement.kind.value}
    try:
        check = TheoremService.verify_statement(statement_id, p, m, options)
        verdict = VerdictLabel.HOLDS if check.verdict.holds else VerdictLabel.VIOLATED
        record = InstanceRecord(
            **base,
            verdict=verdict,
            oracle=check.oracle,
            limit_check=check.limit_check,
            note="; ".join(check.notes) or None,
        )
    except NotApplicable as exc:
        record = InstanceRecord(**base, verdict=VerdictLabel.NOT_APPLICABLE, note=str(exc))
    except QCongException as exc:
        logger.error(f"❌ [RUNNER] {statement_id} p={p} m={m}: {type(exc).__name__}: {exc}")
        record = InstanceRecord(**base, verdict=VerdictLabel.ERROR, note=f"{type(exc).__name__}: {exc}")
    except Exception as exc:
        logger.exception(f"❌ [RUNNER] {statement_id} p={p} m={m}: unexpected failure")
        record = InstanceRecord(**base, verdict=VerdictLabel.ERROR, note=f"{type(exc).__name__}: {exc}")
    record.millis = round((time.perf_counter() - started) * 1000, 3)
    logger.debug(f"🔍 [RUNNER] {statement_id} p={p} m={m} -> {record.verdict.value}")
    return record


def _report_config(config: RunConfig) -> ReportConfig:
    options = config.options
    return ReportConfig(
        statements=config.statements,
        primes=config.primes,
        m_values=config.m_values,
        oracle=options.oracle,
        oracle_primes=options.oracle_primes,
        limit=options.limit,
        mutate=options.mutate,
        fail_fast=config.fail_fast,
        sum_method=options.sum_method,
        environment=Environment(
            package_version=settings.VERSION,
            seed=options.seed,
            mul_algorithm=settings.MUL_ALGORITHM,
            normalize_factor=options.normalize_factor,
            oracle_prime_min=settings.ORACLE_PRIME_MIN,
            oracle_prime_max=settings.ORACLE_PRIME_MAX,
        ),
    )
