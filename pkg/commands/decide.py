"""Membership decision for a single polynomial."""

from typing import Optional

import typer

from core.codec import load_document
from core.counterexample import decide_membership
from core.instances import load_instance
from core.multipoly import BiPoly
from core.output import output, write_report
from core.progress import log_verbose
from core.runner import EXIT_PASS, run_command
from core.settings import settings
from core.witness import verify_witness


def decide(
    file: str = typer.Argument(..., help='JSON or YAML polynomial {"terms": [[[i, j], coeff], ...]}'),
    instance: str = typer.Option("gf4", "--instance", "-i", help="Instance: gf4, gaussian, custom"),
    params: Optional[str] = typer.Option(None, "--params", help="JSON or YAML instance file for --instance custom"),
):
    """Decide whether f(x, y) lies in M and print the witness."""

    def _inner():
        inst = load_instance(instance, params, settings.policy())
        f = BiPoly.from_json(inst.ring, load_document(file), 2)
        log_verbose(f"f = {f}")
        decision = decide_membership(f, inst)
        data = {
            "instance": inst.name,
            "input": f.to_json(),
            "reverified": verify_witness(f, decision.witness, inst),
            **decision.to_json(inst.ring),
        }
        if settings.out:
            write_report(data, settings.out)
        output(data)
        return EXIT_PASS

    run_command(_inner)
