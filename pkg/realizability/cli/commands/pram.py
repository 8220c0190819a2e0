"""PRAM connectivity command."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from realizability.cli.helpers import exit_if_no, get_context, handle_cli_errors, load_instance
from realizability.cli.output import print_decision, print_json, print_key_value, print_raw
from realizability.closure import dump, query
from realizability.pram import connect


def register(app: typer.Typer) -> None:
    @app.command("pram")
    @handle_cli_errors
    def pram_cmd(
        ctx: typer.Context,
        path: Annotated[
            Path,
            typer.Argument(help="Gap-symmetric instance file", exists=True, dir_okay=False, readable=True),
        ],
        s: Annotated[int | None, typer.Option("--s", help="Source vertex")] = None,
        t: Annotated[int | None, typer.Option("--t", help="Target vertex")] = None,
        stats: Annotated[bool, typer.Option("--stats", help="Print the round metrics as JSON")] = False,
        dump_flag: Annotated[bool, typer.Option("--dump", help="Print E and G lines of the fixpoint")] = False,
        exit_status: Annotated[bool, typer.Option("--exit-status", help="Exit 1 when the answer is NO")] = False,
    ) -> None:
        """Hook-and-contract connectivity over vertices and vertex pairs.

        Only for sgslogcfl and 1sgslogcfl instances. With --s/--t (or an
        's= t=' line) prints YES/NO first; --stats adds the metrics record
        {n, outerIterations, pointerJumpSteps, logicalProcessors}.

        Examples:
            realize pram sym.inst --stats
            realize pram sym.inst --s 0 --t 3
        """
        context = get_context(ctx)
        parsed, instance = load_instance(path, context)
        result = connect(
            instance,
            jump_rounds=context.config.pram_jump_rounds,
            max_outer=context.config.pram_max_outer,
        )
        source = s if s is not None else parsed.s
        target = t if t is not None else parsed.t
        answer: bool | None = None
        if source is not None and target is not None:
            answer = query(result.closure, source, target)
            print_decision(answer)

        if dump_flag:
            print_raw(dump(result.closure))
        if stats:
            print_json(
                result.metrics.model_dump(
                    by_alias=True, include={"n", "outer_iterations", "pointer_jump_steps", "logical_processors"}
                )
            )
        elif not dump_flag and answer is None:
            print_key_value(
                {
                    "n": result.metrics.n,
                    "outer_iterations": result.metrics.outer_iterations,
                    "pointer_jump_steps": result.metrics.pointer_jump_steps,
                    "components": len(set(result.x_standard.tolist())),
                },
                "PRAM Connect",
            )
        if answer is not None:
            exit_if_no(answer, exit_status)
