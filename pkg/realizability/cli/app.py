"""
realize - Typer Application
===========================

Assembly point: defines the main Typer app, global options callback,
and registers all command modules.
"""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

# --- Top-level command imports ---
from realizability.cli.commands import balanced, bench, instance, pram, reduce

# --- Sub-app imports ---
from realizability.cli.commands.auxpda import auxpda_app
from realizability.cli.commands.config import config_app
from realizability.cli.commands.gen import gen_app
from realizability.cli.commands.oracle import oracle_app
from realizability.cli.context import CLIContext
from realizability.cli.output import (
    OutputConfig,
    configure_output,
    resolve_output_mode,
    set_quiet,
)
from realizability.config import RealizabilityConfig
from realizability.logging_config import _resolve_log_level, _setup_logging

# =============================================================================
# Main Application
# =============================================================================

app = typer.Typer(
    name="realize",
    help=(
        "realize - Realizable paths in labeled graphs.\n\n"
        "A path is realizable when its push/pop edges match like brackets and the\n"
        "vertex labels around each matched pair agree. Decide it by repeated\n"
        "squaring of a standard and a gap matrix, check against brute-force\n"
        "oracles, reduce between problem variants and balanced walks, simulate\n"
        "hook-and-contract connectivity, and build AuxPDA configuration graphs.\n\n"
        "Quick start:\n"
        "  realize gen random --n 6 --seed 1 -o r.inst   # Random instance\n"
        "  realize query r.inst --s 0 --t 5              # YES / NO\n"
        "  realize closure r.inst --dump                 # Sorted E/G lines\n"
        "  realize oracle crosscheck r.inst              # OK pairs=36\n"
        "  realize variants                              # The six problem variants\n"
        "\n"
        "All subcommands accept --help for detailed usage."
    ),
    no_args_is_help=True,
    rich_markup_mode="rich",
)


# =============================================================================
# Global Options Callback
# =============================================================================


@app.callback()
def main(
    ctx: typer.Context,
    config_path: Annotated[
        Path | None,
        typer.Option(
            "--config",
            help="Config file (default: nearest .realizability.toml)",
            dir_okay=False,
        ),
    ] = None,
    max_vertices: Annotated[
        int | None,
        typer.Option(
            "--max-vertices",
            min=1,
            help="Size cap for instances",
        ),
    ] = None,
    pretty_flag: Annotated[
        bool | None,
        typer.Option(
            "--pretty/--no-pretty",
            help="Force pretty or plain output",
        ),
    ] = None,
    quiet: Annotated[
        bool,
        typer.Option(
            "--quiet",
            "-q",
            help="Suppress success messages (errors still go to stderr)",
        ),
    ] = False,
    debug: Annotated[
        bool,
        typer.Option(
            "--debug",
            help="Log every squaring iteration and PRAM round on stderr",
        ),
    ] = False,
) -> None:
    """realize - Realizable paths in labeled graphs.

    Decide realizability by repeated squaring, check it against brute-force
    oracles, reduce between variants and balanced walks, simulate PRAM
    hook-and-contract connectivity, and build AuxPDA configuration graphs.

    All subcommands accept --help for detailed usage.
    """
    # Resolve output mode and configure consoles
    output_mode = resolve_output_mode(pretty_flag=pretty_flag)
    configure_output(output_mode)
    set_quiet(quiet)

    # Load config from file, then override with CLI options
    config = RealizabilityConfig.load(config_path)
    if max_vertices is not None:
        config.max_vertices = max_vertices

    _setup_logging(_resolve_log_level(debug, config.log_level))

    ctx.obj = CLIContext(
        config=config,
        output=OutputConfig(mode=output_mode),
        config_path=config_path,
    )


# =============================================================================
# Register sub-apps (Typer groups)
# =============================================================================

app.add_typer(oracle_app, name="oracle")
app.add_typer(gen_app, name="gen")
app.add_typer(auxpda_app, name="auxpda")
app.add_typer(config_app, name="config")

# =============================================================================
# Register top-level commands
# =============================================================================

instance.register(app)
balanced.register(app)
reduce.register(app)
pram.register(app)
bench.register(app)


# =============================================================================
# Entry Point
# =============================================================================


def cli_main() -> None:
    """CLI entry point."""
    app()


if __name__ == "__main__":
    cli_main()
