"""Execution wrapper for CLI commands.

Every command body runs through ``run_command`` so errors become a JSON
object on stderr with a stable exit code instead of a traceback:
0 pass, 1 verification failure or internal error, 2 usage or parse error.
"""

import json
import sys
from typing import Callable, Optional

import typer

from core.errors import CLIError
from core.settings import settings

EXIT_PASS = 0
EXIT_FAIL = 1


def run_command(fn: Callable[[], Optional[int]]) -> None:
    """Run fn and exit with its return code (None means pass).

    Usage:
        def my_cmd(...):
            def _inner():
                ...
                return EXIT_PASS
            run_command(_inner)
    """
    try:
        settings.validate()
        code = fn()
    except CLIError as e:
        _output_error(e.message, e.suggestion)
        code = e.exit_code
    except KeyboardInterrupt:
        code = EXIT_PASS
    except Exception as e:
        _output_error(f"{type(e).__name__}: {e}", "Re-run with --verbose and report the input that triggered it.")
        code = EXIT_FAIL
    if code:
        raise typer.Exit(code)


def _output_error(message: str, suggestion: Optional[str] = None):
    """Output error as JSON on stderr."""
    error = {"error": message}
    if suggestion:
        error["suggestion"] = suggestion
    print(json.dumps(error, indent=2), file=sys.stderr)
