"""Command-line entry point of the rarefaction stability harness."""

import functools
import logging
import sys

import click

from nsf_rarefaction import __version__
from nsf_rarefaction.config import get_settings
from nsf_rarefaction.core.enums import RadiationRule
from nsf_rarefaction.domain.inequality import IneqGrid
from nsf_rarefaction.domain.shared.exceptions import DomainException
from nsf_rarefaction.schemas import SweepConfig
from nsf_rarefaction.application.event_handlers.auditing_handler import auditing_handler
from nsf_rarefaction.application.harness.commands.verify_eos import VerifyEosCommand
from nsf_rarefaction.application.harness.commands.verify_inequality import VerifyInequalityCommand
from nsf_rarefaction.application.harness.dependencies import get_harness_application_service

logger = logging.getLogger(__name__)


def _config_help() -> str:
    rows = SweepConfig.describe_defaults()
    width = max(len(key) for key, _, _ in rows)
    lines = ["\b", "Configuration keys (INI sections [wave], [grid], [sweep], [output]):"]
    for key, default, description in rows:
        lines.append(f"  {key:<{width}}  {default:<24}  {description}")
    return "\n".join(lines)


def domain_errors(func):
    """Turn domain exceptions into a message on stderr and exit code 2."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except DomainException as exc:
            click.echo(f"Error: {exc.message}", err=True)
            sys.exit(2)

    return wrapper


def _finish(passed: bool) -> None:
    sys.exit(0 if passed else 1)


@click.group(epilog=_config_help())
@click.version_option(__version__)
@click.option("--log-level", default=None, help="Logging level; defaults to NSF_LOG_LEVEL or INFO.")
def cli(log_level):
    """Planar rarefaction waves under vanishing dissipation: checks, runs and sweeps."""
    level = (log_level or get_settings().log_level).upper()
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s", force=True)


@cli.command("verify-eos")
@click.option("--ztilde", default=1.0, show_default=True, type=float, help="Junction value of the degeneracy variable.")
@click.option("--eps", default=0.1, show_default=True, type=float, help="Dissipation scale fixing a(eps).")
@click.option("--a-rule", default=RadiationRule.SQUARE.value, show_default=True,
              type=click.Choice([r.value for r in RadiationRule]))
@click.option("--samples", default=1000, show_default=True, type=int, help="Random states of the EOS checks.")
@click.option("--bregman-samples", default=10_000, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--out", default=None, type=click.Path(file_okay=False), help="Directory for the report CSVs.")
@domain_errors
def verify_eos(ztilde, eps, a_rule, samples, bregman_samples, seed, out):
    """Check EOS regularity, inversion and the Bregman property suite."""
    command = VerifyEosCommand(ztilde, eps, RadiationRule(a_rule), samples, bregman_samples, seed)
    reports = get_harness_application_service().verify_eos(command, out)
    for report in reports:
        click.echo(report.summary())
    _finish(all(r.passed for r in reports))


@cli.command("verify-inequality")
@click.option("--ztilde", "ztildes", multiple=True, type=float,
              help="Junction value; repeatable. Defaults to 0.1, 1 and 10.")
@click.option("--points", default=2001, show_default=True, type=int, help="Grid points per axis.")
@click.option("--out", default=None, type=click.Path(file_okay=False), help="Directory for the report CSVs.")
@domain_errors
def verify_inequality(ztildes, points, out):
    """Certify F <= 0, the concavity of G and the Hessian at (1, Ztilde)."""
    grid = IneqGrid(y_points=points, z_points=points, Y_points=points)
    command = VerifyInequalityCommand(Ztildes=ztildes or (0.1, 1.0, 10.0), grid=grid)
    reports = get_harness_application_service().verify_inequality(command, out)
    for report in reports:
        click.echo(report.summary())
    _finish(all(r.passed for r in reports))


@cli.command("wave")
@click.option("--config", "config_path", required=True, type=click.Path(dir_okay=False))
@click.option("--t", "t", required=True, type=float, help="Evaluation time (> 0).")
@click.option("--out", default=None, type=click.Path(file_okay=False),
              help="Directory for wave_t_<t>.csv; defaults to output.directory.")
@domain_errors
def wave(config_path, t, out):
    """Sample the exact rarefaction wave at time t and run its self-checks."""
    service = get_harness_application_service()
    config = service.load_config(config_path)
    rarefaction, _, report = service.sample_wave(config, t, out or config.output.directory)
    click.echo(
        f"family {rarefaction.family.value}, fan [{rarefaction.xi_head:.6g}, {rarefaction.xi_tail:.6g}], "
        f"L={rarefaction.L:.6g}, u_R={rarefaction.ends.right.u:.6g}"
    )
    click.echo(report.summary())
    _finish(report.passed)


@cli.command("simulate")
@click.option("--config", "config_path", required=True, type=click.Path(dir_okay=False))
@click.option("--eps", required=True, type=float, help="Dissipation scale (0 integrates the Euler limit).")
@click.option("--out", default=None, type=click.Path(file_okay=False),
              help="Output directory; defaults to output.directory.")
@domain_errors
def simulate(config_path, eps, out):
    """Integrate one eps and write its trajectory and snapshots."""
    service = get_harness_application_service()
    config = service.load_config(config_path)
    outcome = service.simulate(config, eps, out or config.output.directory)
    for line in auditing_handler.lines():
        click.echo(line)
    if outcome.reports:
        last = outcome.reports[-1]
        click.echo(
            f"t={last.t:.6g}: E_rel={last.E_rel_total:.6e} L1(rho)={last.L1_rho:.6e} "
            f"L1(theta)={last.L1_theta:.6e} L1(m)={last.L1_m:.6e}"
        )
    click.echo("RESULT: " + ("FAIL" if outcome.aborted else "PASS"))
    _finish(not outcome.aborted)


@cli.command("sweep")
@click.option("--config", "config_path", required=True, type=click.Path(dir_okay=False))
@click.option("--workers", default=None, type=int, help="Worker processes; 0 runs one per eps. Defaults to NSF_WORKERS.")
@click.option("--out", default=None, type=click.Path(file_okay=False),
              help="Output directory; defaults to output.directory.")
@domain_errors
def sweep(config_path, workers, out):
    """Run the eps sweep and write runs, aggregate, rates and long-format tables."""
    service = get_harness_application_service()
    config = service.load_config(config_path)
    if workers is None:
        workers = get_settings().workers
    result = service.sweep(config, workers, out)
    for line in auditing_handler.lines():
        click.echo(line)
    click.echo(result.summary())
    _finish(result.passed)


@cli.command("report")
@click.option("--in", "directory", required=True, type=click.Path(file_okay=False))
@domain_errors
def report(directory):
    """Recompute rates, the long table and README from a stored sweep."""
    rebuilt = get_harness_application_service().rebuild_report(directory)
    click.echo(rebuilt.summary())
    _finish(rebuilt.passed)


if __name__ == "__main__":
    cli()
