"""Instance commands: validate, init, closure, query, variants."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from realizability.cli.helpers import (
    _should_json,
    exit_if_no,
    finish_decision,
    get_context,
    handle_cli_errors,
    load_instance,
    pick_endpoints,
    read_instance_file,
    resolve_method,
)
from realizability.cli.output import (
    print_decision,
    print_json,
    print_key_value,
    print_raw,
    print_success,
    print_variants_table,
    print_violations,
)
from realizability.closure import ClosureMethod, dump, query, query_gap, transitive_closure
from realizability.core import initialize, popcount, prune_unmatched, validate
from realizability.formats import InstanceFile, dump_closure, dump_instance
from realizability.models import ProblemVariant

InstancePath = Annotated[
    Path,
    typer.Argument(help="Instance file (realizability v1)", exists=True, dir_okay=False, readable=True),
]
MethodOption = Annotated[
    ClosureMethod | None,
    typer.Option("--method", "-m", help="Squaring method (default from config)"),
]
MaxItersOption = Annotated[
    int | None,
    typer.Option("--max-iters", min=1, help="Squaring budget (default 8*ceil(log2(n+1))+8)"),
]
ExitStatusOption = Annotated[
    bool,
    typer.Option("--exit-status", help="Exit 1 when the answer is NO"),
]
JsonOption = Annotated[bool, typer.Option("--json", help="Output as JSON")]


def register(app: typer.Typer) -> None:
    @app.command("validate")
    @handle_cli_errors
    def validate_cmd(
        ctx: typer.Context,
        path: InstancePath,
        exit_status: ExitStatusOption = False,
        json_flag: JsonOption = False,
    ) -> None:
        """Check an instance file against its variant's structural rules.

        Prints YES when the instance is well formed, otherwise NO followed by
        one violation per line.

        Examples:
            realize validate chain.inst
            realize validate sym.inst --exit-status
        """
        context = get_context(ctx)
        parsed = read_instance_file(path)
        report = validate(parsed.graph, parsed.variant)
        print_decision(report.accepted)
        if _should_json(context, json_flag):
            print_json({"accepted": report.accepted, "violations": list(report.violations)})
        else:
            print_violations(report.violations)
        exit_if_no(report.accepted, exit_status)

    @app.command("init")
    @handle_cli_errors
    def init_cmd(
        ctx: typer.Context,
        path: InstancePath,
        prune: Annotated[
            bool,
            typer.Option("--prune", help="Drop push/pop edges that can never be matched first"),
        ] = False,
        output: Annotated[
            Path | None,
            typer.Option("--output", "-o", help="Write the (pruned) instance file here"),
        ] = None,
        dump_flag: Annotated[bool, typer.Option("--dump", help="Print the initial matrices")] = False,
        json_flag: JsonOption = False,
    ) -> None:
        """Build the initial standard and gap matrices and report their sizes.

        Examples:
            realize init chain.inst
            realize init big.inst --prune -o pruned.inst
            realize init chain.inst --dump
        """
        context = get_context(ctx)
        parsed = read_instance_file(path)
        graph = prune_unmatched(parsed.graph) if prune else parsed.graph
        instance = initialize(graph, parsed.variant, context.config.max_vertices)

        if output is not None:
            output.write_text(dump_instance(InstanceFile(graph, parsed.variant, parsed.s, parsed.t)))
        if dump_flag:
            print_raw(dump_closure(instance.standard, instance.gap))
            return

        summary = {
            "variant": instance.variant.value,
            "n": instance.n,
            "k": instance.k,
            "edges": len(graph.edges),
            "removed_edges": len(parsed.graph.edges) - len(graph.edges),
            "standard_ones": popcount(instance.standard),
            "gap_ones": popcount(instance.gap),
        }
        if _should_json(context, json_flag):
            print_json(summary)
        else:
            print_key_value(summary, "Initial matrices")
        if output is not None:
            print_success(f"Wrote {output}")

    @app.command("closure")
    @handle_cli_errors
    def closure_cmd(
        ctx: typer.Context,
        path: InstancePath,
        method: MethodOption = None,
        dump_flag: Annotated[bool, typer.Option("--dump", help="Print E and G lines of the fixpoint")] = False,
        max_iters: MaxItersOption = None,
        json_flag: JsonOption = False,
    ) -> None:
        """Square the matrix pair until it stops changing.

        --dump prints one 'E a b' line per realizable pair and one
        'G a b c d' line per gap tuple (a,(c,d),b), sorted; the output is
        byte-stable across runs.

        Examples:
            realize closure --method simple --dump f.inst
            realize closure f.inst --method square --json
        """
        context = get_context(ctx)
        _, instance = load_instance(path, context)
        chosen = resolve_method(context, method)
        result = transitive_closure(instance, chosen, max_iters=max_iters or context.config.max_iters)
        if dump_flag:
            print_raw(dump(result))
            return
        summary = {
            "method": chosen.value,
            "n": result.n,
            "iterations": result.iterations,
            "realizable_pairs": popcount(result.standard),
            "gap_ones": popcount(result.gap),
        }
        if _should_json(context, json_flag):
            print_json(summary)
        else:
            print_key_value(summary, "Closure")

    @app.command("query")
    @handle_cli_errors
    def query_cmd(
        ctx: typer.Context,
        path: InstancePath,
        s: Annotated[int | None, typer.Option("--s", help="Source vertex (default from file)")] = None,
        t: Annotated[int | None, typer.Option("--t", help="Target vertex (default from file)")] = None,
        gap: Annotated[
            tuple[int, int, int, int] | None,
            typer.Option("--gap", help="Ask for the gap tuple A C D B instead of a pair"),
        ] = None,
        method: MethodOption = None,
        max_iters: MaxItersOption = None,
        exit_status: ExitStatusOption = False,
    ) -> None:
        """Is there a realizable path from s to t (or a path with gap)?

        Prints YES or NO.

        Examples:
            realize query chain.inst --s 0 --t 2
            realize query chain.inst --gap 0 1 1 2
            realize query chain.inst --exit-status && echo reachable
        """
        context = get_context(ctx)
        parsed, instance = load_instance(path, context)
        chosen = resolve_method(context, method)
        result = transitive_closure(instance, chosen, max_iters=max_iters or context.config.max_iters)
        if gap:
            a, c, d, b = gap
            answer = query_gap(result, a, c, d, b)
        else:
            source, target = pick_endpoints(s, t, parsed.s, parsed.t)
            answer = query(result, source, target)
        finish_decision(answer, exit_status)

    @app.command("variants")
    def variants_cmd(
        ctx: typer.Context,
        json_flag: JsonOption = False,
    ) -> None:
        """List the six problem variants with their label-count and symmetry columns."""
        context = get_context(ctx)
        if _should_json(context, json_flag):
            print_json(
                [
                    {
                        "variant": v.value,
                        "name": v.display_name,
                        "labels": v.label_count,
                        "standardSymmetric": v.standard_symmetric,
                        "gapSymmetric": v.gap_symmetric,
                    }
                    for v in ProblemVariant
                ]
            )
        else:
            print_variants_table()
