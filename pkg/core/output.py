"""Unified report output for all CLI commands."""

from typing import Any, Dict, Optional

from rich.console import Console
from rich.table import Table

from core.codec import dumps
from core.settings import settings


def output(data: Any, format: Optional[str] = None) -> None:
    """Print a report to stdout as sorted JSON or a rich summary, respecting quiet mode."""
    if settings.quiet:
        return

    fmt = format or settings.format
    if fmt == "json":
        output_json(data)
    elif isinstance(data, dict):
        _output_summary(data)
    else:
        print(str(data))


def output_json(data: Any) -> None:
    print(dumps(data))


def write_report(data: Any, path: str) -> None:
    """Write the JSON form of a report; byte-identical for identical data."""
    with open(path, "w") as f:
        f.write(dumps(data))
        f.write("\n")


def _cell(value: Any) -> str:
    if isinstance(value, dict):
        if "status" in value:
            return str(value["status"])
        if "verdict" in value:
            return str(value["verdict"])
        return ", ".join(f"{k}={_cell(v)}" for k, v in sorted(value.items()) if not isinstance(v, (dict, list)))
    if isinstance(value, list):
        return f"[{len(value)} items]"
    return str(value)


def _output_summary(data: Dict[str, Any]) -> None:
    """Key/value table of the top level of a report."""
    console = Console()
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("key", style="cyan")
    table.add_column("value")
    for key in sorted(data):
        table.add_row(key, _cell(data[key]))
    console.print(table)
