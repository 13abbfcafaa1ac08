"""Command line entry point"""
import logging
import sys
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import click
from pydantic import ValidationError

from qcong.catalog import CATALOG
from qcong.core.config import settings
from qcong.core.exceptions import QCongException
from qcong.models.polynomial import IntPoly
from qcong.models.ratfunc import RatFunc, eval_at
from qcong.schemas.qobjects import PochSpec
from qcong.schemas.run_config import OutputFormat, RunConfig, VerifyOptions
from qcong.services.qkit_service import QKitService
from qcong.services.report_service import ReportService
from qcong.services.theorem_service import TheoremService
from qcong.utils.helpers import parse_id_list, parse_int_range

logger = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


@contextmanager
def _exit_on_domain_error():
    """Report domain and usage errors on stderr and exit 2."""
    try:
        yield
    except (QCongException, ValidationError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


@click.group()
@click.version_option(settings.VERSION, prog_name=settings.APP_NAME)
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help="Overrides QCONG_LOG_LEVEL.")
def cli(log_level: Optional[str]):
    """Exact verification of q-analogue congruences."""
    logging.basicConfig(
        level=(log_level or settings.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

@cli.command()
@click.option("--statements", default="all", show_default=True, help="Comma separated ids, or all.")
@click.option("--primes", default="3..31", show_default=True, help="a..b, p, or a comma list.")
@click.option("--m", "m_values", default=None, help="Free parameter values; defaults per statement.")
@click.option("--oracle/--no-oracle", default=True, show_default=True)
@click.option("--oracle-primes", type=int, default=None, help="Primes per instance for the F_ell oracle.")
@click.option("--limit/--no-limit", default=True, show_default=True, help="q -> 1 cross-checks.")
@click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]),
              default=OutputFormat.TABLE.value, show_default=True)
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--jobs", type=int, default=None, help="Worker processes (default QCONG_JOBS).")
@click.option("--fail-fast", is_flag=True, help="Stop at the first violated instance.")
@click.option("--normalize-factor", type=int, default=None)
@click.option("--mutate", is_flag=True, help="Perturb every RHS; each instance must then fail.")
@click.option("--sum-method", type=click.Choice(["horner", "termwise"]), default=None)
@click.option("--seed", type=int, default=None, help="Oracle prime seed.")
def verify(
    statements: str,
    primes: str,
    m_values: Optional[str],
    oracle: bool,
    oracle_primes: Optional[int],
    limit: bool,
    output_format: str,
    output: Optional[Path],
    jobs: Optional[int],
    fail_fast: bool,
    normalize_factor: Optional[int],
    mutate: bool,
    sum_method: Optional[str],
    seed: Optional[int],
):
    """Check a sweep of catalogued statements."""
    with _exit_on_domain_error():
        config = RunConfig(
            statements=parse_id_list(statements),
            primes=parse_int_range(primes),
            m_values=parse_int_range(m_values) if m_values else None,
            options=VerifyOptions(
                oracle=oracle,
                oracle_primes=settings.ORACLE_PRIME_COUNT if oracle_primes is None else oracle_primes,
                limit=limit,
                mutate=mutate,
                seed=settings.ORACLE_SEED if seed is None else seed,
                sum_method=sum_method or settings.SUM_METHOD,
                normalize_factor=settings.NORMALIZE_FACTOR if normalize_factor is None else normalize_factor,
            ),
            output_format=output_format,
            output=output,
            jobs=jobs or settings.JOBS,
            fail_fast=fail_fast,
        )

    report = TheoremService.verify_range(config)
    logger.info(f"🏁 [VERIFY] {report.summary.total} instances, exit code {report.exit_code()}")
    if config.output is not None:
        with _exit_on_domain_error():
            ReportService.write(report, config.output_format, config.output)
    else:
        click.echo(ReportService.render(report, config.output_format), nl=False)
    sys.exit(report.exit_code())


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _emit(value: Union[IntPoly, RatFunc], at: Optional[str], pretty: bool) -> None:
    if at is not None:
        click.echo(str(eval_at(value, Fraction(at))))
    elif isinstance(value, IntPoly):
        click.echo(value.pretty() if pretty else value.coefficient_string())
    else:
        click.echo(value.render(pretty=pretty))


def _eval_options(command):
    command = click.option("--pretty", is_flag=True, help="Render as 1 + q + 2q^2.")(command)
    return click.option("--at", default=None, help="Evaluate at a rational point, e.g. 2 or 1/3.")(command)


@cli.group(name="eval")
def eval_group():
    """Evaluate a single q-object."""


@eval_group.command()
@click.argument("n", type=int)
@_eval_options
def qint(n: int, at: Optional[str], pretty: bool):
    """[n]_q"""
    with _exit_on_domain_error():
        _emit(QKitService.q_int(n), at, pretty)


@eval_group.command()
@click.argument("n", type=int)
@click.argument("m", type=int)
@click.argument("s", type=int, default=1)
@_eval_options
def qbinom(n: int, m: int, s: int, at: Optional[str], pretty: bool):
    """[n, m] in base q^s"""
    with _exit_on_domain_error():
        _emit(QKitService.q_binom(n, m, s), at, pretty)


@eval_group.command()
@click.argument("sign", type=click.Choice(["1", "-1"]))
@click.argument("offset", type=int)
@click.argument("step", type=int)
@click.argument("length", type=int)
@_eval_options
def qpoch(sign: str, offset: int, step: int, length: int, at: Optional[str], pretty: bool):
    """prod_{j<length} (1 - sign q^(offset + j step))"""
    with _exit_on_domain_error():
        spec = PochSpec(sign=int(sign), offset=offset, step=step, length=length)
        _emit(QKitService.q_poch(spec), at, pretty)


@eval_group.command()
@click.argument("p", type=int)
@click.argument("m", type=int)
@_eval_options
def qfermat(p: int, m: int, at: Optional[str], pretty: bool):
    """Q_p(m, q)"""
    with _exit_on_domain_error():
        _emit(QKitService.q_fermat_quotient(p, m), at, pretty)


# ---------------------------------------------------------------------------
# report / catalog
# ---------------------------------------------------------------------------

@cli.command()
@click.argument("input_path", metavar="INPUT", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]),
              default=OutputFormat.TABLE.value, show_default=True)
def report(input_path: Path, output_format: str):
    """Re-render a JSON report."""
    with _exit_on_domain_error():
        loaded = ReportService.load(input_path)
    click.echo(ReportService.render(loaded, output_format), nl=False)


def _scope(statement) -> str:
    parts = []
    if statement.uses_prime:
        parts.append(f"{'prime ' if statement.prime_only else ''}p >= {statement.min_prime}")
    if statement.parameter and statement.default_params:
        low, high = statement.default_params[0], statement.default_params[-1]
        parts.append(f"{statement.parameter} = {low}..{high} by default")
    return ", ".join(parts)


@cli.command()
def catalog():
    """List catalogued statements."""
    for statement in CATALOG.values():
        companion = statement.companion or "-"
        click.echo(
            f"{statement.id:<11} {statement.kind.value:<15} {statement.describe_modulus():<10} "
            f"{companion:<10} {_scope(statement)}"
        )
        click.echo(f"{'':<11} {statement.title}")


def main():
    cli(prog_name="qcong")


if __name__ == "__main__":
    main()
