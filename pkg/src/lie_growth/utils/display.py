"""Console output utilities and report rendering."""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, Optional

from rich import box
from rich.console import Console
from rich.markup import escape
from rich.table import Table
from rich.text import Text

from ..core.models import GrowthTable, OutputFormat

console = Console()
err_console = Console(stderr=True)

GROWTH_COLUMNS = ("n", "d", "g")

# Reports are rendered into a colourless console of fixed width.
TABLE_WIDTH = 160


def print_error(message: str) -> None:
    """Display an error message."""
    err_console.print(f"[red]✗[/red] {escape(message)}", highlight=False)


def print_info(message: str) -> None:
    """Display an info message."""
    err_console.print(f"[blue]ℹ[/blue] {escape(message)}")


# ── Report rendering ──────────────────────────────────────────────────


def _json_value(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, float):
        return float(format(value, ".12g"))
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return str(value)


def _text_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    if isinstance(value, (list, tuple)):
        return " ".join(_text_value(v) for v in value)
    return str(value)


def _rows(obj: GrowthTable | dict | Iterable[dict]) -> tuple[list[dict], Optional[tuple]]:
    if isinstance(obj, GrowthTable):
        return obj.to_rows(), GROWTH_COLUMNS
    if isinstance(obj, dict):
        return [obj], None
    return list(obj), None


def emit(
    obj: GrowthTable | dict | Iterable[dict],
    fmt: OutputFormat | str = OutputFormat.TABLE,
    prime: Optional[int] = None,
    title: Optional[str] = None,
) -> str:
    """Render a growth table, a list of row dicts or a single record.

    JSON lines have one compact object per row, CSV has a header line, and
    `table` is an aligned plain-text table. Column order is the key order of
    the first row. With `prime` the report is stamped with the field used.
    """
    fmt = OutputFormat(fmt)
    rows, columns = _rows(obj)
    if columns is None:
        columns = tuple(rows[0]) if rows else ()

    if fmt is OutputFormat.JSON:
        lines = []
        if prime is not None:
            lines.append(json.dumps({"field": "prime", "prime": prime}, separators=(",", ":")))
        for row in rows:
            record = {key: _json_value(row.get(key)) for key in columns}
            lines.append(json.dumps(record, ensure_ascii=False, separators=(",", ":")))
        return "\n".join(lines)

    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        if prime is not None:
            buffer.write(f"# field=prime p={prime}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        if columns:
            writer.writerow(columns)
        for row in rows:
            writer.writerow([_text_value(row.get(key)) for key in columns])
        return buffer.getvalue().rstrip("\n")

    caption = f"field: prime p={prime}" if prime is not None else None
    table = Table(
        title=Text(title) if title else None,
        caption=caption,
        box=box.SIMPLE,
        show_header=True,
        # keep title and caption on one line
        min_width=max(len(title or ""), len(caption or "")) + 4,
    )
    for key in columns:
        table.add_column(key, justify="right" if key in GROWTH_COLUMNS else "left")
    for row in rows:
        table.add_row(*(Text(_text_value(row.get(key))) for key in columns))
    buffer = io.StringIO()
    Console(
        file=buffer, width=TABLE_WIDTH, color_system=None, force_terminal=False, highlight=False
    ).print(table)
    return "\n".join(line.rstrip() for line in buffer.getvalue().splitlines()).strip("\n")
