"""AuxPDA commands: graph, run, accept, symmetrize."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated

import typer

from realizability.auxpda import accepts, config_graph, direct_simulate, parse_machine, symmetric_closure
from realizability.auxpda.machine import AuxPdaSpec
from realizability.cli.helpers import finish_decision, get_context, handle_cli_errors, resolve_method
from realizability.cli.output import print_raw, print_success
from realizability.closure import ClosureMethod
from realizability.formats import InstanceFile, dump_instance

auxpda_app = typer.Typer(
    help=(
        "Auxiliary pushdown automata described as JSON.\n\n"
        "Build the surface configuration graph of a machine on an input, decide\n"
        "acceptance through realizability, simulate directly, or close the\n"
        "transition set under inversion."
    )
)

MachinePath = Annotated[
    Path,
    typer.Argument(help="Machine description (JSON)", exists=True, dir_okay=False, readable=True),
]
InputOption = Annotated[
    str,
    typer.Option("--input", "-w", help="Input word; one symbol per character, or space-separated symbols"),
]


def _load(path: Path) -> AuxPdaSpec:
    return parse_machine(path.read_text(encoding="utf-8"))


def split_word(text: str) -> list[str]:
    return text.split() if any(ch.isspace() for ch in text) else list(text)


@auxpda_app.command("graph")
@handle_cli_errors
def auxpda_graph(
    ctx: typer.Context,
    path: MachinePath,
    word: InputOption = "",
    output: Annotated[Path | None, typer.Option("--output", "-o", help="Write here instead of stdout")] = None,
) -> None:
    """Emit the configuration graph as a realizability instance file.

    Vertex 0 is the start configuration and the last vertex is the halting
    configuration; the file's 's= t=' line names both.

    Examples:
        realize auxpda graph dyck.json --input '(())'
        realize auxpda graph dyck.json -w '()' -o dyck.inst
    """
    context = get_context(ctx)
    graph = config_graph(
        _load(path),
        split_word(word),
        budget=context.config.config_graph_budget,
        max_vertices=context.config.max_vertices,
    )
    text = dump_instance(InstanceFile(graph.instance.graph, graph.instance.variant, graph.s, graph.t))
    if output is None:
        print_raw(text)
        return
    output.write_text(text, encoding="utf-8")
    print_success(f"Wrote {output} ({graph.instance.n} configurations)")


@auxpda_app.command("run")
@handle_cli_errors
def auxpda_run(
    path: MachinePath,
    word: InputOption = "",
    step_bound: Annotated[int, typer.Option("--step-bound", min=0, help="Maximum computation length")] = 200,
    stack_bound: Annotated[int, typer.Option("--stack-bound", min=1, help="Maximum stack height incl. $")] = 32,
) -> None:
    """Simulate the machine with its full stack; prints accept, reject or budget.

    Examples:
        realize auxpda run dyck.json --input '(()'
    """
    result = direct_simulate(_load(path), split_word(word), step_bound, stack_bound)
    print_raw(f"{result.outcome.value}\n")
    if result.steps is not None:
        print_raw(f"steps={result.steps}\n")
    print_raw(f"explored={result.explored}\n")


@auxpda_app.command("accept")
@handle_cli_errors
def auxpda_accept(
    ctx: typer.Context,
    path: MachinePath,
    word: InputOption = "",
    method: Annotated[
        ClosureMethod | None,
        typer.Option("--method", "-m", help="Squaring method (default from config)"),
    ] = None,
    exit_status: Annotated[bool, typer.Option("--exit-status", help="Exit 1 when the answer is NO")] = False,
) -> None:
    """Decide acceptance: configuration graph, closure, then query start ~> halt.

    Examples:
        realize auxpda accept dyck.json --input '(())'
    """
    context = get_context(ctx)
    answer = accepts(
        _load(path),
        split_word(word),
        method=resolve_method(context, method),
        budget=context.config.config_graph_budget,
        max_vertices=context.config.max_vertices,
    )
    finish_decision(answer, exit_status)


@auxpda_app.command("symmetrize")
@handle_cli_errors
def auxpda_symmetrize(
    path: MachinePath,
    output: Annotated[Path | None, typer.Option("--output", "-o", help="Write here instead of stdout")] = None,
) -> None:
    """Write the machine with every transition's inverse added.

    Examples:
        realize auxpda symmetrize anbn.json -o anbn-sym.json
    """
    text = json.dumps(symmetric_closure(_load(path)).to_json_dict(), indent=2) + "\n"
    if output is None:
        print_raw(text)
        return
    output.write_text(text, encoding="utf-8")
    print_success(f"Wrote {output}")
