#!/usr/bin/env python3
"""Main CLI entry point for the skew Laurent series ideal verifier."""

import sys
from typing import Optional

import typer

from commands import decide, docs, sweep, verify
from core.progress import log_error
from core.settings import settings

app = typer.Typer(
    help="Verify a maximal left ideal of D[x, y] whose contraction to D[x] is not maximal",
    context_settings={"help_option_names": ["-h", "--help"]},
    add_completion=False,
    rich_markup_mode="rich",
    epilog="""
[bold]Quick Examples:[/bold]
  cli.py verify --instance gf4
  cli.py --format json --out report.json verify --instance gaussian
  cli.py check-witness report.json
  cli.py decide f.json --instance gf4
  cli.py remark-sweep --trials 10000

[bold]Documentation:[/bold]
  cli.py docs commands              List all available commands
  cli.py --format json docs commands    List commands in JSON format
  cli.py docs help <command>        Show detailed help for a command

[bold]Exit codes:[/bold] 0 pass, 1 verification failure, 2 usage or parse error
""",
)


# Global options callback
@app.callback()
def global_options(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show debug information and progress"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Suppress output except errors"),
    format: str = typer.Option("text", "--format", "-f", help="Output format: text, json"),
    precision: int = typer.Option(16, "--precision", help="Working precision for truncated series (at least 4)"),
    seed: int = typer.Option(0, "--seed", help="Seed for every randomized choice"),
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Also write the JSON report to this path"),
):
    """Global options for all commands."""
    settings.verbose = verbose
    settings.quiet = quiet
    settings.format = format
    settings.precision = precision
    settings.seed = seed
    settings.out = out


app.command(name="verify")(verify.verify)
app.command(name="check-witness")(verify.check_witness)
app.command(name="decide")(decide.decide)
app.command(name="remark-sweep")(sweep.sweep)
app.command(name="remark-check")(sweep.check)
app.add_typer(docs.app, name="docs", help="Documentation: commands, help")


if __name__ == "__main__":
    try:
        app()
    except KeyboardInterrupt:
        sys.exit(0)
    except Exception as e:
        log_error(str(e))
        sys.exit(1)
