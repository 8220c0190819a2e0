"""Per-iteration timing and popcounts of a closure run, as CSV rows."""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable
from typing import NamedTuple

from realizability.closure import ClosureMethod, ClosureResult, MatrixPair, transitive_closure
from realizability.core import Instance, popcount

CSV_COLUMNS = ("iteration", "elapsed_ms", "popcount_standard", "popcount_gap")


class BenchRow(NamedTuple):
    iteration: int
    elapsed_ms: float
    popcount_standard: int
    popcount_gap: int


def bench_closure(
    instance: Instance,
    method: ClosureMethod = ClosureMethod.SIMPLE,
    max_iters: int | None = None,
) -> tuple[ClosureResult, list[BenchRow]]:
    rows: list[BenchRow] = []

    def record(iteration: int, pair: MatrixPair, elapsed: float) -> None:
        rows.append(BenchRow(iteration, elapsed * 1000.0, popcount(pair.standard), popcount(pair.gap)))

    result = transitive_closure(instance, method=method, max_iters=max_iters, on_iteration=record)
    return result, rows


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow((row.iteration, f"{row.elapsed_ms:.3f}", row.popcount_standard, row.popcount_gap))
    return buffer.getvalue()
