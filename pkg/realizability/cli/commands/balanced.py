"""Balanced walk command."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from realizability.cli.helpers import (
    _exit_usage,
    exit_if_no,
    finish_decision,
    get_context,
    handle_cli_errors,
    load_digraph,
    pick_endpoints,
)
from realizability.cli.output import print_decision, print_raw
from realizability.closure import query, transitive_closure
from realizability.oracle import BalanceMode, balanced_walk_dp
from realizability.reductions import balanced_to_1sgs, k_balanced_reduce, positive_balanced_to_1s


def register(app: typer.Typer) -> None:
    @app.command("balanced")
    @handle_cli_errors
    def balanced_cmd(
        ctx: typer.Context,
        path: Annotated[
            Path,
            typer.Argument(help="Digraph file (digraph v1)", exists=True, dir_okay=False, readable=True),
        ],
        s: Annotated[int | None, typer.Option("--s", help="Source vertex (default from file)")] = None,
        t: Annotated[int | None, typer.Option("--t", help="Target vertex (default from file)")] = None,
        bound: Annotated[
            int | None,
            typer.Option("--bound", min=0, help="Maximum walk length (default 4*n^2)"),
        ] = None,
        mode: Annotated[BalanceMode, typer.Option("--mode", help="Which walks count")] = BalanceMode.BALANCED,
        k: Annotated[int, typer.Option("--k", min=0, help="Required final balance for the k modes")] = 0,
        via_closure: Annotated[
            bool,
            typer.Option("--via-closure", help="Decide through the single-label reduction and closure"),
        ] = False,
        exit_status: Annotated[bool, typer.Option("--exit-status", help="Exit 1 when the answer is NO")] = False,
    ) -> None:
        """Is there a balanced walk from s to t in the underlying undirected graph?

        Forward edges count +1, backward edges -1 and edges present both ways
        count 0. Prints YES and the minimal length, or NO.

        Examples:
            realize balanced --s 0 --t 4 --bound 32 theta8.digraph
            realize balanced g.digraph --mode positive
            realize balanced g.digraph --mode k-balanced --k 2
            realize balanced g.digraph --via-closure
        """
        context = get_context(ctx)
        parsed = load_digraph(path)
        source, target = pick_endpoints(s, t, parsed.s, parsed.t)
        if k and not mode.counts_k:
            _exit_usage(f"--k needs --mode k-balanced or positive-k-balanced, got {mode.value}", "realize balanced")

        if via_closure:
            digraph, goal = parsed.digraph, target
            if mode.counts_k:
                reduced = k_balanced_reduce(digraph, source, target, k)
                digraph, goal = reduced.digraph, reduced.t if reduced.t is not None else target
            reduce = positive_balanced_to_1s if mode.positive else balanced_to_1sgs
            instance = reduce(digraph, source, goal, context.config.max_vertices).instance
            result = transitive_closure(instance, max_iters=context.config.max_iters)
            finish_decision(query(result, source, goal), exit_status)
            return

        max_len = bound if bound is not None else 4 * parsed.digraph.n**2
        length = balanced_walk_dp(parsed.digraph, source, target, max_len, mode, k)
        print_decision(length is not None)
        if length is not None:
            print_raw(f"length={length}\n")
        exit_if_no(length is not None, exit_status)
