"""Counterexample verification commands."""

from typing import Optional

import typer

from core.codec import load_document
from core.counterexample import run_counterexample
from core.errors import ConfigError, ParseError
from core.instances import load_instance
from core.multipoly import BiPoly
from core.output import output, write_report
from core.progress import log, log_error, log_success, log_verbose
from core.runner import EXIT_FAIL, EXIT_PASS, run_command
from core.settings import settings
from core.witness import verify_witness, witness_from_json

DEFAULT_TRIALS = 1000
DEFAULT_ENUM_DEPTH = 4


def _check_counts(trials: int, enum_depth: int):
    if trials < 1:
        raise ConfigError(f"--trials must be at least 1, got {trials}")
    if enum_depth < 1:
        raise ConfigError(f"--enum-depth must be at least 1, got {enum_depth}")


def verify(
    instance: str = typer.Option("gf4", "--instance", "-i", help="Instance: gf4, gaussian, custom"),
    params: Optional[str] = typer.Option(None, "--params", help="JSON or YAML instance file for --instance custom"),
    trials: int = typer.Option(DEFAULT_TRIALS, "--trials", "-n", help="Random membership decisions to run"),
    enum_depth: int = typer.Option(DEFAULT_ENUM_DEPTH, "--enum-depth", help="Root prefix depth over a finite field"),
):
    """Verify that M = <(x-a)(x-b), y-c> is maximal while M ∩ D[x] is not."""

    def _inner():
        _check_counts(trials, enum_depth)
        policy = settings.policy()
        inst = load_instance(instance, params, policy)
        log_verbose(f"Instance {inst.name}: a = {inst.a}, b = {inst.b}, c = {inst.c}")
        report = run_counterexample(inst, policy, trials=trials, enum_depth=enum_depth, seed=settings.seed)
        data = report.to_json()
        if settings.out:
            write_report(data, settings.out)
            log_verbose(f"Report written to {settings.out}")
        output(data)
        if report.passed:
            log_success(f"{inst.name}: M is maximal and M ∩ D[x] = D[x]q is not")
            return EXIT_PASS
        log_error(f"{inst.name}: verification failed at {report.first_failure}")
        return EXIT_FAIL

    run_command(_inner)


def check_witness(
    report_file: str = typer.Argument(..., help="Report written by verify --out"),
    instance: Optional[str] = typer.Option(None, "--instance", "-i", help="Instance (defaults to the report's)"),
    params: Optional[str] = typer.Option(None, "--params", help="JSON or YAML instance file for --instance custom"),
):
    """Re-verify every witness of a verify report by expansion."""

    def _inner():
        report = load_document(report_file)
        if not isinstance(report, dict) or "maximality_trials" not in report:
            raise ParseError(report_file, "not a verify report")
        inst = load_instance(instance or report.get("instance", ""), params, settings.policy())
        checked, rejected = 0, []
        for trial in report["maximality_trials"]:
            f = BiPoly.from_json(inst.ring, trial["input"], 2)
            witness = witness_from_json(inst.ring, trial["witness"])
            checked += 1
            if not verify_witness(f, witness, inst):
                rejected.append(trial.get("index"))
        output({"instance": inst.name, "checked": checked, "rejected": rejected, "overall": "fail" if rejected else "pass"})
        if rejected:
            log_error(f"{len(rejected)} of {checked} witnesses do not expand to their claims")
            return EXIT_FAIL
        log(f"{checked} witnesses re-verified")
        return EXIT_PASS

    run_command(_inner)
