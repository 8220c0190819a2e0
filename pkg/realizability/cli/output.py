"""Console output for the realize CLI.

PRETTY renders through rich, PLAIN writes tab-separated text without ANSI
escapes, JSON is left to the commands (see ``_should_json``). A command's
``--json`` flag wins over ``--pretty/--no-pretty``, which wins over TTY
detection.

Decision lines (YES/NO), closure dumps and CSV bypass rich entirely so the
bytes are the same in every mode.
"""

from __future__ import annotations

import enum
import json
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from rich.console import Console
from rich.markup import escape
from rich.table import Table
from rich.text import Text

from realizability.models import ProblemVariant

console = Console()
err_console = Console(stderr=True)
_quiet = False

_CONTROL = str.maketrans("", "", "".join(map(chr, range(0x20))) + "\x7f")


class OutputMode(enum.Enum):
    PRETTY = "pretty"
    PLAIN = "plain"
    JSON = "json"


@dataclass(frozen=True)
class OutputConfig:
    mode: OutputMode

    @property
    def is_json(self) -> bool:
        return self.mode is OutputMode.JSON

    @property
    def is_plain(self) -> bool:
        return self.mode is OutputMode.PLAIN

    @property
    def is_pretty(self) -> bool:
        return self.mode is OutputMode.PRETTY


def resolve_output_mode(pretty_flag: bool | None = None) -> OutputMode:
    if pretty_flag is None:
        return OutputMode.PRETTY if sys.stdout.isatty() else OutputMode.PLAIN
    return OutputMode.PRETTY if pretty_flag else OutputMode.PLAIN


def set_quiet(quiet: bool) -> None:
    """``--quiet`` hides confirmations; answers and errors still print."""
    global _quiet
    _quiet = quiet


def configure_output(mode: OutputMode) -> None:
    """Swap the module consoles for ``mode``."""
    global console, err_console
    if mode is OutputMode.PRETTY:
        console = Console()
        err_console = Console(stderr=True)
        return
    console = Console(highlight=False, no_color=True, soft_wrap=True)
    err_console = Console(stderr=True, highlight=False, no_color=True, soft_wrap=True)


def _plain() -> bool:
    return console.no_color


def sanitize_tsv(value: str) -> str:
    """Make ``value`` safe for a single TSV cell."""
    for separator in ("\t", "\n", "\r"):
        value = value.replace(separator, " ")
    return value.translate(_CONTROL)


# =============================================================================
# Lines
# =============================================================================


def print_line(text: str) -> None:
    """Print rich markup; PLAIN mode drops the tags.

    Interpolated values must go through ``rich.markup.escape`` first, or a
    lowercase ``[...]`` run inside them is read as a tag.
    """
    if _plain():
        print(Text.from_markup(text).plain)
    else:
        console.print(text)


def print_raw(text: str) -> None:
    """Write ``text`` untouched (dumps, instance files, CSV, status lines)."""
    sys.stdout.write(text)
    sys.stdout.flush()


def print_decision(answer: bool) -> None:
    print_raw("YES\n" if answer else "NO\n")


def print_json(data: Any) -> None:
    if _plain():
        print(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        console.print_json(json.dumps(data, ensure_ascii=False))


def print_success(message: str) -> None:
    if _quiet:
        return
    if _plain():
        print(message)
        return
    console.print(Text.assemble(("[OK] ", "bold green"), message))


def print_error(message: str, code: str | None = None) -> None:
    """``Error: message`` and an optional ``Code: CODE`` line on stderr."""
    if err_console.no_color:
        print(f"Error: {message}", file=sys.stderr)
        if code:
            print(f"Code: {code}", file=sys.stderr)
        return
    err_console.print(Text.assemble(("Error: ", "bold red"), message))
    if code:
        err_console.print(Text.assemble(("Code: ", "dim"), (code, "yellow")))


def print_validation_error(message: str, help_command: str) -> None:
    print_error(f"{message}. Run '{help_command} --help' for usage.")


def print_key_value(data: dict[str, Any], title: str | None = None) -> None:
    """``key<TAB>value`` lines in PLAIN mode, an indented list otherwise."""
    if _plain():
        for key, value in data.items():
            print(f"{sanitize_tsv(str(key))}\t{sanitize_tsv(str(value))}")
        return
    if title:
        console.print(f"[bold]{escape(title)}[/bold]")
    for key, value in data.items():
        console.print(f"  [cyan]{escape(str(key))}:[/cyan] {escape(str(value))}")


# =============================================================================
# Domain tables
# =============================================================================

_VARIANT_COLUMNS = ("Variant", "Name", "Labels", "Standard symmetric", "Gap symmetric")


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _variant_row(variant: ProblemVariant) -> tuple[str, ...]:
    return (
        variant.value,
        variant.display_name,
        variant.label_count,
        _yes_no(variant.standard_symmetric),
        _yes_no(variant.gap_symmetric),
    )


def _print_tsv(rows: Sequence[Sequence[str]]) -> None:
    for row in rows:
        print("\t".join(sanitize_tsv(cell) for cell in row))


def print_variants_table() -> None:
    """The six problem variants with their label-count and symmetry columns."""
    rows = [_variant_row(v) for v in ProblemVariant]
    if _plain():
        _print_tsv([_VARIANT_COLUMNS, *rows])
        return

    table = Table(title="Problem variants")
    table.add_column("Variant", style="cyan", no_wrap=True)
    table.add_column("Name", style="bold")
    for column in _VARIANT_COLUMNS[2:]:
        table.add_column(column, justify="center")
    for row in rows:
        table.add_row(*(escape(cell) for cell in row))
    console.print(table)


def print_violations(violations: Sequence[str]) -> None:
    """One violation per line after the NO line."""
    for violation in violations:
        if _plain():
            print(sanitize_tsv(violation))
        else:
            console.print(f"  [red]-[/red] {escape(violation)}")
