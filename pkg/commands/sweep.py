"""Rational quaternion commands."""

import typer

from core.errors import ConfigError
from core.nullstellensatz import quaternion_remark_check, remark_sweep
from core.output import output, write_report
from core.progress import create_progress, log_error, log_success
from core.quaternion import QuaternionRing
from core.runner import EXIT_FAIL, EXIT_PASS, run_command
from core.settings import settings

DEFAULT_SWEEP_TRIALS = 10000


def sweep(
    trials: int = typer.Option(DEFAULT_SWEEP_TRIALS, "--trials", "-n", help="Random quaternion triples to check"),
    height: int = typer.Option(3, "--height", help="Bound on numerators and denominators of components"),
):
    """Check random quaternion triples; none may satisfy all three conditions."""

    def _inner():
        if trials < 1:
            raise ConfigError(f"--trials must be at least 1, got {trials}")
        if height < 1:
            raise ConfigError(f"--height must be at least 1, got {height}")
        with create_progress("Sweeping quaternion triples", total=trials) as progress:
            task = progress.add_task("remark sweep", total=trials)
            report = remark_sweep(trials, settings.seed, height, lambda _: progress.update(task, advance=1))
        data = report.to_json()
        if settings.out:
            write_report(data, settings.out)
        output(data)
        if report.passed:
            log_success(f"{trials} triples, no full certification: {report.histogram}")
            return EXIT_PASS
        log_error(f"{report.fully_certified} triples certified all three conditions")
        return EXIT_FAIL

    run_command(_inner)


def check(
    a: str = typer.Argument(..., help="r,i,j,k"),
    b: str = typer.Argument(..., help="r,i,j,k"),
    c: str = typer.Argument(..., help="r,i,j,k"),
):
    """Check one quaternion triple."""

    def _inner():
        ring = QuaternionRing()
        qa, qb, qc = (ring.parse(text.split(",")) for text in (a, b, c))
        output(quaternion_remark_check(qa, qb, qc).to_json())
        return EXIT_PASS

    run_command(_inner)
