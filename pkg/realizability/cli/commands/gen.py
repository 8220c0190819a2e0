"""Generator commands: random, digraph, theta."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from realizability.cli.helpers import get_context, handle_cli_errors
from realizability.cli.output import print_raw, print_success
from realizability.formats import DigraphFile, InstanceFile, dump_digraph, dump_instance
from realizability.generators import gen_random, gen_theta_n2, random_digraph
from realizability.models import ProblemVariant

gen_app = typer.Typer(
    help=(
        "Generate instances and digraphs.\n\n"
        "Random generators need an explicit --seed; the same seed always gives\n"
        "the same file."
    )
)

OutputOption = Annotated[Path | None, typer.Option("--output", "-o", help="Write here instead of stdout")]
SeedOption = Annotated[int, typer.Option("--seed", help="Random seed (required)")]
DensityOption = Annotated[float, typer.Option("--density", "-d", min=0.0, max=1.0, help="Edge probability")]


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        print_raw(text)
        return
    output.write_text(text, encoding="utf-8")
    print_success(f"Wrote {output}")


@gen_app.command("random")
@handle_cli_errors
def gen_random_cmd(
    ctx: typer.Context,
    n: Annotated[int, typer.Option("--n", min=1, help="Vertex count")],
    seed: SeedOption,
    k: Annotated[int, typer.Option("--k", min=1, help="Label count")] = 2,
    variant: Annotated[ProblemVariant, typer.Option("--variant", help="Problem variant")] = ProblemVariant.LOGCFL,
    density: DensityOption = 0.3,
    output: OutputOption = None,
) -> None:
    """Random instance honoring the variant's label count and symmetry.

    Examples:
        realize gen random --n 6 --k 2 --seed 7
        realize gen random --n 6 --k 1 --variant 1sgslogcfl --seed 7 -o r.inst
    """
    context = get_context(ctx)
    instance = gen_random(n, k, variant, density, seed, context.config.max_vertices)
    _emit(dump_instance(InstanceFile(instance.graph, instance.variant)), output)


@gen_app.command("digraph")
@handle_cli_errors
def gen_digraph_cmd(
    n: Annotated[int, typer.Option("--n", min=1, help="Vertex count")],
    seed: SeedOption,
    density: DensityOption = 0.3,
    output: OutputOption = None,
) -> None:
    """Random digraph without self-loops.

    Examples:
        realize gen digraph --n 8 --seed 3 -o g.digraph
    """
    _emit(dump_digraph(DigraphFile(random_digraph(n, density, seed))), output)


@gen_app.command("theta")
@handle_cli_errors
def gen_theta_cmd(
    n: Annotated[int, typer.Option("--n", help="Even vertex count, at least 8")],
    output: OutputOption = None,
) -> None:
    """Digraph whose only balanced s-t walks have length n/2 + (n/2)^2.

    Examples:
        realize gen theta --n 8 -o theta8.digraph
    """
    problem = gen_theta_n2(n)
    _emit(dump_digraph(DigraphFile(problem.digraph, problem.s, problem.t)), output)
