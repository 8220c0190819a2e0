"""Oracle commands: crosscheck, saturate, walk, gap, string."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import numpy as np
import typer

from realizability.cli.exit_codes import ExitCode
from realizability.cli.helpers import (
    finish_decision,
    get_context,
    handle_cli_errors,
    load_instance,
    pick_endpoints,
    resolve_method,
)
from realizability.cli.output import print_error, print_raw
from realizability.closure import ClosureMethod, transitive_closure
from realizability.core import check_vertex
from realizability.models import GrammarVariant
from realizability.oracle import (
    WalkBound,
    enumerate_walk_check,
    gap_pair_check,
    is_realizable_string,
    saturate_gap,
    saturate_realizable,
)

oracle_app = typer.Typer(
    help=(
        "Brute-force ground truth that shares no code with the squaring closure.\n\n"
        "Saturation decides every pair exactly; walk enumeration confirms single\n"
        "pairs or gap tuples up to a length bound; string checks one label string."
    )
)

InstancePath = Annotated[
    Path,
    typer.Argument(help="Instance file (realizability v1)", exists=True, dir_okay=False, readable=True),
]


@oracle_app.command("crosscheck")
@handle_cli_errors
def oracle_crosscheck(
    ctx: typer.Context,
    path: InstancePath,
    method: Annotated[
        ClosureMethod | None,
        typer.Option("--method", "-m", help="Squaring method to check (default from config)"),
    ] = None,
) -> None:
    """Compare the closure's realizable pairs with the saturation oracle.

    Prints 'OK pairs=<n^2>' when every pair agrees; otherwise lists the
    disagreeing pairs on stderr and exits 4.

    Examples:
        realize oracle crosscheck f.inst
        realize oracle crosscheck f.inst --method square
    """
    context = get_context(ctx)
    _, instance = load_instance(path, context)
    result = transitive_closure(instance, resolve_method(context, method), max_iters=context.config.max_iters)
    expected = saturate_realizable(instance)
    mismatches = np.argwhere(result.standard != expected)
    if mismatches.size == 0:
        print_raw(f"OK pairs={instance.n * instance.n}\n")
        return
    for a, b in mismatches:
        print_error(f"pair ({a},{b}): closure={bool(result.standard[a, b])} oracle={bool(expected[a, b])}")
    print_raw(f"MISMATCH pairs={len(mismatches)}\n")
    raise typer.Exit(ExitCode.OPERATION_ERROR)


@oracle_app.command("saturate")
@handle_cli_errors
def oracle_saturate(ctx: typer.Context, path: InstancePath) -> None:
    """Print the realizable pairs found by worklist saturation as 'E a b' lines."""
    context = get_context(ctx)
    _, instance = load_instance(path, context)
    relation = saturate_realizable(instance)
    print_raw("".join(f"E {a} {b}\n" for a, b in np.argwhere(relation)))


@oracle_app.command("walk")
@handle_cli_errors
def oracle_walk(
    ctx: typer.Context,
    path: InstancePath,
    s: Annotated[int | None, typer.Option("--s", help="Source vertex (default from file)")] = None,
    t: Annotated[int | None, typer.Option("--t", help="Target vertex (default from file)")] = None,
    bound: Annotated[int, typer.Option("--bound", min=0, help="Maximum walk length")] = 8,
    exit_status: Annotated[bool, typer.Option("--exit-status", help="Exit 1 when the answer is NO")] = False,
) -> None:
    """Enumerate walks s ~> t up to --bound edges and check their label strings.

    Examples:
        realize oracle walk chain.inst --s 0 --t 2 --bound 4
    """
    context = get_context(ctx)
    parsed, instance = load_instance(path, context)
    source, target = pick_endpoints(s, t, parsed.s, parsed.t)
    answer = enumerate_walk_check(
        instance, source, target, WalkBound(max_len=bound), work_budget=context.config.oracle_work_budget
    )
    finish_decision(answer, exit_status)


@oracle_app.command("gap")
@handle_cli_errors
def oracle_gap(
    ctx: typer.Context,
    path: InstancePath,
    gap: Annotated[tuple[int, int, int, int], typer.Option("--gap", help="Gap tuple A C D B")],
    bound: Annotated[
        int | None,
        typer.Option("--bound", min=0, help="Enumerate walks up to this length instead of saturating"),
    ] = None,
    exit_status: Annotated[bool, typer.Option("--exit-status", help="Exit 1 when the answer is NO")] = False,
) -> None:
    """Is (a,(c,d),b) realizable with a gap?

    Without --bound the exact two-copy saturation decides; with --bound both
    halves are enumerated and a NO only means none was found.

    Examples:
        realize oracle gap chain.inst --gap 0 1 1 2
        realize oracle gap chain.inst --gap 0 1 1 2 --bound 4
    """
    context = get_context(ctx)
    _, instance = load_instance(path, context)
    a, c, d, b = gap
    check_vertex(instance.n, a, c, d, b)
    if bound is None:
        answer = bool(saturate_gap(instance.graph, instance.variant.grammar, c, d)[a, b])
    else:
        walk = WalkBound(max_len=bound)
        answer = gap_pair_check(instance, a, c, d, b, walk, walk, work_budget=context.config.oracle_work_budget)
    finish_decision(answer, exit_status)


@oracle_app.command("string")
@handle_cli_errors
def oracle_string(
    string: Annotated[str, typer.Argument(help="Label string, e.g. 'a1 push a2 eps a2 pop a1'")],
    grammar: Annotated[GrammarVariant, typer.Option("--grammar", "-g", help="Grammar")] = GrammarVariant.STANDARD,
    exit_status: Annotated[bool, typer.Option("--exit-status", help="Exit 1 when the answer is NO")] = False,
) -> None:
    """Is the label string generated by the grammar?

    Examples:
        realize oracle string 'a1 push a2 pop a1'
        realize oracle string 'a1 pop a1 push a1' --grammar symmetric-gap
    """
    finish_decision(is_realizable_string(string, grammar), exit_status)
