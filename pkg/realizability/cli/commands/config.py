"""Configuration commands: show, init."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer
from rich.markup import escape

from realizability.cli.exit_codes import ExitCode
from realizability.cli.helpers import _should_json, get_context
from realizability.cli.output import print_error, print_json, print_line, print_success
from realizability.config import CONFIG_FILE_NAME, RealizabilityConfig

config_app = typer.Typer(
    help=(
        "Inspect or generate the realize config file (.realizability.toml).\n\n"
        "Stores the size cap, default closure method and work budgets. Looked up\n"
        "from the current directory upward; --config points at a file directly."
    )
)


def _derived(value: int | None) -> str:
    return "derived from n" if value is None else str(value)


@config_app.command("show")
def config_show(
    ctx: typer.Context,
    json_flag: Annotated[
        bool,
        typer.Option("--json", help="Output as JSON"),
    ] = False,
) -> None:
    """Print the resolved config (file + CLI flags) and its source path."""
    context = get_context(ctx)
    config = context.config
    config_file = context.config_path or RealizabilityConfig._find_config_file()

    if _should_json(context, json_flag):
        data = {"config_file": str(config_file) if config_file else None, **config.model_dump()}
        print_json(data)
    else:
        print_line("[bold]=== realize configuration ===[/bold]")
        location = escape(str(config_file)) if config_file else "[dim]Not found (using defaults)[/dim]"
        print_line(f"Config file: {location}")
        print_line(f"Max vertices: {config.max_vertices}")
        print_line(f"Closure method: {config.closure_method}")
        print_line(f"Max iterations: {_derived(config.max_iters)}")
        print_line(f"Oracle work budget: {config.oracle_work_budget}")
        print_line(f"Config graph budget: {config.config_graph_budget}")
        print_line(f"PRAM jump rounds: {_derived(config.pram_jump_rounds)}")
        print_line(f"PRAM max outer rounds: {_derived(config.pram_max_outer)}")
        print_line(f"Log level: {config.log_level}")


@config_app.command("init")
def config_init(
    output: Annotated[
        Path | None,
        typer.Option("--output", "-o", help="Output path"),
    ] = None,
    force: Annotated[
        bool,
        typer.Option("--force", "-f", help="Overwrite existing config"),
    ] = False,
) -> None:
    """Write a default .realizability.toml into the current directory (edit to taste).

    Use --output to pick a different path, --force to overwrite an existing file.
    """
    output_path = output or Path(CONFIG_FILE_NAME)

    if output_path.exists() and not force:
        print_error(f"{output_path} already exists. Use --force to overwrite.")
        raise typer.Exit(ExitCode.USAGE_ERROR) from None

    output_path.write_text(RealizabilityConfig().to_toml())
    print_success(f"Created {output_path}")
