"""Shared CLI helper functions."""

from __future__ import annotations

import functools
from collections.abc import Callable
from pathlib import Path
from typing import Any, NoReturn

import typer

from realizability.cli.context import CLIContext
from realizability.cli.exit_codes import ExitCode, exit_code_for
from realizability.cli.output import (
    OutputMode,
    configure_output,
    print_decision,
    print_error,
    print_validation_error,
)
from realizability.closure import ClosureMethod
from realizability.core import Instance, initialize
from realizability.exceptions import ParameterError, RealizabilityError
from realizability.formats import DigraphFile, InstanceFile, parse_digraph, parse_instance

# =============================================================================
# Error Handler
# =============================================================================


def _handle_error(e: RealizabilityError) -> None:
    """Print error and raise typer.Exit with the mapped exit code."""
    print_error(e.message, e.code)
    raise typer.Exit(exit_code_for(e)) from None


def handle_cli_errors(fn: Callable[..., None]) -> Callable[..., None]:
    """Decorator that catches RealizabilityError and exits with the mapped code."""

    @functools.wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            fn(*args, **kwargs)
        except RealizabilityError as e:
            _handle_error(e)

    return wrapper


def _exit_usage(message: str, usage: str) -> NoReturn:
    """Print a validation error and exit with USAGE_ERROR."""
    print_validation_error(message, usage)
    raise typer.Exit(ExitCode.USAGE_ERROR) from None


def get_context(ctx: typer.Context) -> CLIContext:
    context = ctx.find_object(CLIContext)
    return context if context is not None else CLIContext()


# =============================================================================
# Per-command JSON helper
# =============================================================================


def _should_json(context: CLIContext, json_flag: bool) -> bool:
    """Return True when output should be JSON."""
    if json_flag:
        configure_output(OutputMode.JSON)
        return True
    return context.output.is_json


# =============================================================================
# Decisions
# =============================================================================


def exit_if_no(answer: bool, exit_status: bool) -> None:
    if not answer and exit_status:
        raise typer.Exit(ExitCode.NO_ANSWER)


def finish_decision(answer: bool, exit_status: bool) -> None:
    """Print YES/NO; a NO exits 1 when --exit-status was given."""
    print_decision(answer)
    exit_if_no(answer, exit_status)


# =============================================================================
# Loaders
# =============================================================================


def read_instance_file(path: Path) -> InstanceFile:
    return parse_instance(path.read_text(encoding="utf-8"))


def load_instance(path: Path, context: CLIContext) -> tuple[InstanceFile, Instance]:
    """Parse, validate and initialize an instance file under the configured size cap."""
    parsed = read_instance_file(path)
    return parsed, initialize(parsed.graph, parsed.variant, context.config.max_vertices)


def load_digraph(path: Path) -> DigraphFile:
    return parse_digraph(path.read_text(encoding="utf-8"))


def resolve_method(context: CLIContext, method: ClosureMethod | None) -> ClosureMethod:
    return method if method is not None else ClosureMethod(context.config.closure_method)


def pick_endpoints(flag_s: int | None, flag_t: int | None, file_s: int | None, file_t: int | None) -> tuple[int, int]:
    """Flags win over the file's ``s= t=`` line.

    Raises:
        ParameterError: neither source gives both endpoints
    """
    s = flag_s if flag_s is not None else file_s
    t = flag_t if flag_t is not None else file_t
    if s is None or t is None:
        raise ParameterError("no endpoints: pass --s and --t or add an 's= t=' line", "MISSING_ENDPOINTS")
    return s, t
