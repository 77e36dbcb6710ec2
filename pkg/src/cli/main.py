"""
saxlkit command line.

Exit codes: 0 success, 2 usage or IO error, 3 zero coefficient (kron),
4 invalid certificate, 5 verification failure.
"""

import functools
import logging
import sys
from pathlib import Path
from typing import Optional

import click
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from src.certificates import emit_certificate, load_certificate, save_certificate, verify_certificate
from src.certificates.audit import audit_axioms
from src.characters import character_value, configure_cache, write_column_csv
from src.characters.statistics import vanishing_table
from src.cli.schemas import LOG_LEVELS, RunConfig
from src.kronecker import default_oracle
from src.partitions import Partition, enumerate_partitions, format_partition, parse_partition
from src.saxl import (
    FAILED,
    FAMILIES,
    StaircaseReducer,
    dominance_table,
    staircase_like,
    verify_family,
    verify_generalized_saxl,
)
from src.utils.config import config
from src.utils.errors import CertificateError, ReductionError, SaxlkitError
from src.utils.logger import setup_logger

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ZERO = 3
EXIT_INVALID = 4
EXIT_FAILED = 5


class PartitionType(click.ParamType):
    """Partitions in the bracket/exponent grammar, e.g. "[3^3,2]"."""

    name = "partition"

    def convert(self, value, param, ctx) -> Partition:
        if isinstance(value, Partition):
            return value
        try:
            return parse_partition(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


PARTITION = PartitionType()


def handle_errors(func):
    """Report expected failures on stderr and exit 2 instead of printing a traceback."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (SaxlkitError, ValueError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


def _table(frame, title: str) -> Table:
    table = Table(title=title)
    for column in frame.columns:
        table.add_column(str(column), justify="right")
    for row in frame.itertuples(index=False):
        table.add_row(*(f"{v:.6f}" if isinstance(v, float) else str(v) for v in row))
    return table


# ==========================================
# Group
# ==========================================

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--threads", type=int, default=None, help="Worker processes; 0 = logical cores [env SAXLKIT_THREADS].")
@click.option("--cache-entries", type=int, default=None, help="Character memo cap [env SAXLKIT_CACHE_ENTRIES].")
@click.option("--max-n", type=int, default=None, help="Largest size for kron/support [env SAXLKIT_MAX_N].")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None)
@click.option("--quiet", is_flag=True, default=False, help="No progress bars.")
@click.option("--no-timings", "no_timings", is_flag=True, default=False, help="Write millis as 0 in reports.")
@click.option("--brute-cap", "brute_force_size_cap", type=int, default=None, help="Brute-force size cap.")
@click.option("--audit-cap", type=int, default=None, help="Axiom audit size cap.")
@click.option("--extended/--no-extended", default=None, help="Recompute manifest leaves (hours).")
@click.option("--output-dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.pass_context
def cli(ctx, no_timings, **options):
    """Exact characters and Kronecker coefficients of S_n, and Saxl certificates."""
    if no_timings:
        options["report_timings"] = False
    try:
        run = RunConfig.from_options(**options)
    except ValidationError as exc:
        raise click.UsageError(str(exc)) from None

    setup_logger("src", level=run.log_level, log_to_file=config.LOG_TO_FILE, log_dir=config.LOG_DIR)
    configure_cache(run.cache_entries)
    default_oracle.max_n = run.max_n
    logger.debug("run config: %s", run.as_dict())
    ctx.obj = run


# ==========================================
# Characters and coefficients
# ==========================================

@cli.command()
@click.argument("lam", type=PARTITION)
@click.argument("mu", type=PARTITION)
@click.argument("nu", type=PARTITION)
@handle_errors
def kron(lam: Partition, mu: Partition, nu: Partition):
    """Exact Kronecker coefficient g(LAM, MU, NU); exit 3 when it is zero."""
    value = default_oracle.kronecker(lam, mu, nu)
    click.echo(value)
    sys.exit(EXIT_OK if value > 0 else EXIT_ZERO)


@cli.command()
@click.argument("lam", type=PARTITION, required=False)
@click.argument("mu", type=PARTITION, required=False)
@click.option("--column", "column", type=PARTITION, default=None, help="Dump chi^lambda(MU) for every lambda as CSV.")
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), default=None)
@handle_errors
def char(lam: Optional[Partition], mu: Optional[Partition], column: Optional[Partition], output: Optional[Path]):
    """Character value chi^LAM(MU), or a full column with --column."""
    if column is not None:
        if output is None:
            write_column_csv(column, sys.stdout)
        else:
            output.parent.mkdir(parents=True, exist_ok=True)
            write_column_csv(column, output)
        return
    if lam is None or mu is None:
        raise click.UsageError("char needs LAM and MU, or --column MU")
    click.echo(character_value(lam, mu))


@cli.command()
@click.argument("lam", type=PARTITION)
@handle_errors
def support(lam: Partition):
    """Constituents of the tensor square of LAM, reverse-lex, then missing=<count>."""
    found = default_oracle.tensor_square_support(lam)
    missing = 0
    for nu in enumerate_partitions(lam.size):
        if nu in found:
            click.echo(format_partition(nu))
        else:
            missing += 1
    click.echo(f"missing={missing}")


# ==========================================
# Certificates
# ==========================================

@cli.command("saxl-verify")
@click.option("--family", type=click.Choice(sorted(FAMILIES)), required=True)
@click.option("--from", "start", type=int, required=True, help="First parameter (m or k).")
@click.option("--to", "end", type=int, required=True, help="Last parameter (m or k).")
@click.option("--certs-dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--no-certs", is_flag=True, help="Do not write certificate files.")
@click.option("--report", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_obj
@handle_errors
def saxl_verify(run: RunConfig, family: str, start: int, end: int, certs_dir, no_certs: bool, report):
    """Certify every target of a family; exit 5 if any target fails."""
    certs = None if no_certs else (certs_dir or config.CERTS_DIR)
    result = verify_family(
        family,
        start,
        end,
        policy=run.policy(),
        threads=run.threads,
        certs_dir=certs,
        report_timings=run.report_timings,
        progress=not run.quiet,
    )
    report = report or run.output_dir / f"{family}_{start}-{end}.csv"
    result.to_csv(report)
    click.echo(result.summary_line())
    for target in result.failed_targets:
        click.echo(f"failed {target}", err=True)
    sys.exit(EXIT_OK if result.succeeded else EXIT_FAILED)


@cli.command()
@click.argument("m", type=click.IntRange(min=1))
@click.argument("mu", type=PARTITION)
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_obj
@handle_errors
def certify(run: RunConfig, m: int, mu: Partition, output: Optional[Path]):
    """Certificate for (rho_M, MU), printed as JSON or written to --output."""
    policy = run.policy()
    try:
        cert = StaircaseReducer(policy).certify(m, mu)
    except ReductionError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FAILED)
    result = verify_certificate(cert, policy)
    if not result.ok:
        click.echo(result.explain(), err=True)
        sys.exit(EXIT_INVALID)
    if output is None:
        click.echo(emit_certificate(cert), nl=False)
    else:
        save_certificate(cert, output)
        click.echo(f"{output.as_posix()} nodes={cert.node_count} depth={cert.depth}")


@cli.command("check-cert")
@click.argument("path", type=click.Path(dir_okay=False, path_type=Path))
@click.pass_obj
@handle_errors
def check_cert(run: RunConfig, path: Path):
    """Check a .kcert.json file; exit 4 with the failing node path if invalid."""
    try:
        cert = load_certificate(path)
    except CertificateError as exc:
        click.echo(f"invalid at root: {exc}")
        sys.exit(EXIT_INVALID)
    result = verify_certificate(cert, run.policy())
    if result.ok:
        click.echo(f"valid {cert.alpha} {cert.beta} nodes={cert.node_count} depth={cert.depth}")
        sys.exit(EXIT_OK)
    click.echo(result.explain())
    sys.exit(EXIT_INVALID)


@cli.command()
@click.option("--report", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_obj
@handle_errors
def audit(run: RunConfig, report: Optional[Path]):
    """Re-check every allowlisted axiom instance up to the audit cap."""
    result = audit_axioms(run.policy(), report_timings=run.report_timings)
    if report is not None:
        result.to_csv(report)

    per_axiom = {}
    for record in result.records:
        name = record.target.split(" ", 1)[0]
        ok, failed = per_axiom.get(name, (0, 0))
        per_axiom[name] = (ok + (record.status != FAILED), failed + (record.status == FAILED))
    table = Table(title=f"Axiom audit (sizes <= {run.policy().audit_cap})")
    table.add_column("axiom")
    table.add_column("checked", justify="right")
    table.add_column("failed", justify="right")
    for name, (ok, failed) in sorted(per_axiom.items()):
        table.add_row(name, str(ok + failed), str(failed))
    Console(stderr=True).print(table)

    click.echo(result.summary_line())
    sys.exit(EXIT_OK if result.succeeded else EXIT_FAILED)


# ==========================================
# Statistics
# ==========================================

@cli.command()
@click.option("--rho-max", type=click.IntRange(min=1), required=True)
@click.option("--rho-min", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@handle_errors
def stats(rho_max: int, rho_min: int, csv_path: Optional[Path]):
    """Dominance statistics of the staircases rho_m."""
    frame = dominance_table(rho_max, m_min=rho_min)
    if csv_path is not None:
        csv_path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(csv_path, index=False, lineterminator="\n")
    Console().print(_table(frame, "Dominance statistics of rho_m"))


@cli.command()
@click.option("--m-max", type=click.IntRange(min=1), required=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@handle_errors
def vanishing(m_max: int, csv_path: Optional[Path]):
    """Vanishing characters on rho_m and on its principal hook class."""
    frame = vanishing_table(m_max)
    if csv_path is not None:
        csv_path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(csv_path, index=False, lineterminator="\n")
    Console().print(_table(frame, "Vanishing characters"))


@cli.command("staircase-like")
@click.argument("n", type=click.IntRange(min=1))
@click.option("--verify", is_flag=True, help="Check full tensor squares for every size 3..N.")
@click.pass_obj
@handle_errors
def staircase_like_cmd(run: RunConfig, n: int, verify: bool):
    """List the staircase-like partitions of N, or verify sizes up to N."""
    if not verify:
        for lam in staircase_like(n):
            click.echo(format_partition(lam))
        return
    result = verify_generalized_saxl(n, report_timings=run.report_timings)
    click.echo(result.summary_line())
    for target in result.failed_targets:
        click.echo(f"failed {target}", err=True)
    sys.exit(EXIT_OK if result.succeeded else EXIT_FAILED)


def main(argv=None) -> int:
    """Entry point returning the exit code instead of exiting."""
    try:
        cli.main(args=argv, prog_name="saxlkit", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return 1
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    return EXIT_OK
