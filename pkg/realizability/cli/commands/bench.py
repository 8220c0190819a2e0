"""Benchmark command."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from realizability.bench import bench_closure, rows_to_csv
from realizability.cli.helpers import _exit_usage, get_context, handle_cli_errors, load_instance, resolve_method
from realizability.cli.output import print_raw, print_success
from realizability.closure import ClosureMethod
from realizability.generators import gen_random
from realizability.models import ProblemVariant


def register(app: typer.Typer) -> None:
    @app.command("bench")
    @handle_cli_errors
    def bench_cmd(
        ctx: typer.Context,
        path: Annotated[
            Path | None,
            typer.Argument(help="Instance file; omit to bench a generated instance", exists=True, dir_okay=False),
        ] = None,
        n: Annotated[int, typer.Option("--n", min=1, help="Vertex count of the generated instance")] = 16,
        k: Annotated[int, typer.Option("--k", min=1, help="Label count of the generated instance")] = 2,
        variant: Annotated[
            ProblemVariant, typer.Option("--variant", help="Variant of the generated instance")
        ] = ProblemVariant.LOGCFL,
        density: Annotated[float, typer.Option("--density", min=0.0, max=1.0, help="Edge probability")] = 0.2,
        seed: Annotated[int | None, typer.Option("--seed", help="Seed; required without a file")] = None,
        method: Annotated[
            ClosureMethod | None,
            typer.Option("--method", "-m", help="Squaring method (default from config)"),
        ] = None,
        output: Annotated[Path | None, typer.Option("--output", "-o", help="Write CSV here")] = None,
    ) -> None:
        """Time every squaring iteration; CSV columns iteration, elapsed_ms,
        popcount_standard, popcount_gap.

        Examples:
            realize bench f.inst --method square
            realize bench --n 32 --k 2 --seed 1 -o bench.csv
        """
        context = get_context(ctx)
        if path is not None:
            _, instance = load_instance(path, context)
        else:
            if seed is None:
                _exit_usage("--seed is required when no instance file is given", "realize bench")
            instance = gen_random(n, k, variant, density, seed, context.config.max_vertices)

        _, rows = bench_closure(instance, resolve_method(context, method), context.config.max_iters)
        text = rows_to_csv(rows)
        if output is None:
            print_raw(text)
            return
        output.write_text(text, encoding="utf-8")
        print_success(f"Wrote {output} ({len(rows)} iterations)")
