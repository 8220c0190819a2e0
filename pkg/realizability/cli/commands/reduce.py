"""Reduction command."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from realizability.cli.helpers import (
    _exit_usage,
    get_context,
    handle_cli_errors,
    load_digraph,
    load_instance,
    pick_endpoints,
)
from realizability.cli.output import print_success
from realizability.formats import DigraphFile, InstanceFile, dump_certs, dump_digraph, dump_instance
from realizability.reductions import (
    REDUCTION_NAMES,
    DigraphReduction,
    InstanceReduction,
    balanced_to_1sgs,
    eliminate_epsilon,
    k_balanced_reduce,
    onesgs_to_balanced,
    positive_balanced_to_1s,
    stconn_to_1logcfl,
)

_INSTANCE_INPUT = frozenset({"eliminate-epsilon", "1sgs-to-balanced"})


def _render(reduction: InstanceReduction | DigraphReduction) -> str:
    if isinstance(reduction, InstanceReduction):
        instance = reduction.instance
        return dump_instance(InstanceFile(instance.graph, instance.variant, reduction.s, reduction.t))
    return dump_digraph(DigraphFile(reduction.digraph, reduction.s, reduction.t))


def register(app: typer.Typer) -> None:
    @app.command("reduce")
    @handle_cli_errors
    def reduce_cmd(
        ctx: typer.Context,
        name: Annotated[str, typer.Argument(help=f"Reduction: {', '.join(REDUCTION_NAMES)}")],
        path: Annotated[
            Path,
            typer.Argument(help="Input instance or digraph file", exists=True, dir_okay=False, readable=True),
        ],
        output: Annotated[
            Path,
            typer.Option("--output", "-o", help="Target file; the cert goes to <output>.cert.jsonl"),
        ],
        s: Annotated[int | None, typer.Option("--s", help="Source vertex (default from file)")] = None,
        t: Annotated[int | None, typer.Option("--t", help="Target vertex (default from file)")] = None,
        k: Annotated[int, typer.Option("--k", min=0, help="Final balance for k-balanced")] = 0,
    ) -> None:
        """Apply a reduction and write the target file plus a JSON-lines certificate.

        Instance inputs: eliminate-epsilon, 1sgs-to-balanced. Digraph inputs:
        stconn-to-1logcfl, balanced-to-1sgs, positive-balanced-to-1s,
        k-balanced (needs endpoints and --k).

        Examples:
            realize reduce eliminate-epsilon f.inst -o f.noeps.inst
            realize reduce balanced-to-1sgs g.digraph -o g.inst
            realize reduce k-balanced g.digraph --s 0 --t 3 --k 2 -o g2.digraph
        """
        if name not in REDUCTION_NAMES:
            _exit_usage(f"unknown reduction {name!r} (choose from {', '.join(REDUCTION_NAMES)})", "realize reduce")
        context = get_context(ctx)
        cap = context.config.max_vertices

        reduction: InstanceReduction | DigraphReduction
        if name in _INSTANCE_INPUT:
            parsed, instance = load_instance(path, context)
            source = s if s is not None else parsed.s
            target = t if t is not None else parsed.t
            if name == "eliminate-epsilon":
                reduction = eliminate_epsilon(instance, source, target, cap)
            else:
                reduction = onesgs_to_balanced(instance, source, target)
        else:
            digraph_file = load_digraph(path)
            source = s if s is not None else digraph_file.s
            target = t if t is not None else digraph_file.t
            digraph = digraph_file.digraph
            if name == "stconn-to-1logcfl":
                reduction = stconn_to_1logcfl(digraph, source, target, cap)
            elif name == "balanced-to-1sgs":
                reduction = balanced_to_1sgs(digraph, source, target, cap)
            elif name == "positive-balanced-to-1s":
                reduction = positive_balanced_to_1s(digraph, source, target, cap)
            else:
                source, target = pick_endpoints(s, t, digraph_file.s, digraph_file.t)
                reduction = k_balanced_reduce(digraph, source, target, k)

        output.write_text(_render(reduction), encoding="utf-8")
        cert_path = output.with_name(output.name + ".cert.jsonl")
        cert_path.write_text(dump_certs([reduction.cert]), encoding="utf-8")
        print_success(f"Wrote {output} and {cert_path}")
