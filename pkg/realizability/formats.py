"""
Text formats
============

Line-oriented codecs for the files the command line reads and writes.

Instance file::

    realizability v1
    n=<int> k=<int> directed=<0|1> variant=<name>
    label <v> <i>
    edge <u> <v> <push|pop|eps>
    s=<int> t=<int>

Digraph file::

    digraph v1
    n=<int>
    arc <u> <v>
    s=<int> t=<int>

Closure dump: ``E a b`` and ``G a b c d`` lines (G is Gap[a,(c,d),b]) in
lexicographic order. Comments start with ``#``; blank lines are ignored.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from realizability.bits import BitMatrix
from realizability.exceptions import FormatError
from realizability.models import (
    BoolMatrix,
    Digraph,
    Edge,
    EdgeKind,
    LabeledGraph,
    ProblemVariant,
    ReductionCert,
)

INSTANCE_HEADER = "realizability v1"
DIGRAPH_HEADER = "digraph v1"


@dataclass(frozen=True)
class InstanceFile:
    graph: LabeledGraph
    variant: ProblemVariant
    s: int | None = None
    t: int | None = None


@dataclass(frozen=True)
class DigraphFile:
    digraph: Digraph
    s: int | None = None
    t: int | None = None


# =============================================================================
# Line helpers
# =============================================================================


def _lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped content) for non-empty lines."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content


def _int(value: str, line: int, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {value!r}", line) from None


def _assignments(content: str, line: int) -> dict[str, str]:
    """Parse ``key=value key=value`` tokens."""
    pairs: dict[str, str] = {}
    for token in content.split():
        key, sep, value = token.partition("=")
        if not sep or not key or not value:
            raise FormatError(f"expected key=value, got {token!r}", line)
        pairs[key] = value
    return pairs


def _endpoints(pairs: dict[str, str], line: int) -> tuple[int, int]:
    if set(pairs) != {"s", "t"}:
        raise FormatError("expected 's=<int> t=<int>'", line)
    return _int(pairs["s"], line, "s"), _int(pairs["t"], line, "t")


def _check_vertex(v: int, n: int, line: int) -> None:
    if not 0 <= v < n:
        raise FormatError(f"vertex {v} out of range 0..{n - 1}", line)


# =============================================================================
# Instance files
# =============================================================================


def parse_instance(text: str) -> InstanceFile:
    """Parse an instance file.

    For directed=0 files every edge implies its reverse (push implies the
    reverse pop). Reflexive eps loops are always inserted. Conflicting labels
    on one pair are kept so validation can report them.
    """
    lines = _lines(text)
    number, header = next(lines, (1, ""))
    if header != INSTANCE_HEADER:
        raise FormatError(f"expected header {INSTANCE_HEADER!r}", number)

    number, params_line = next(lines, (number + 1, ""))
    params = _assignments(params_line, number)
    missing = {"n", "k", "directed", "variant"} - set(params)
    if missing:
        raise FormatError(f"missing parameters: {', '.join(sorted(missing))}", number)
    n = _int(params["n"], number, "n")
    k = _int(params["k"], number, "k")
    if n < 1 or k < 1:
        raise FormatError("n and k must be positive", number)
    if params["directed"] not in ("0", "1"):
        raise FormatError("directed must be 0 or 1", number)
    directed = params["directed"] == "1"
    try:
        variant = ProblemVariant(params["variant"])
    except ValueError:
        raise FormatError(f"unknown variant {params['variant']!r}", number) from None

    labels = [1] * n
    edges: list[tuple[int, int, EdgeKind]] = []
    s: int | None = None
    t: int | None = None
    for number, content in lines:
        words = content.split()
        if words[0] == "label":
            if len(words) != 3:
                raise FormatError("expected 'label <v> <i>'", number)
            v = _int(words[1], number, "vertex")
            _check_vertex(v, n, number)
            labels[v] = _int(words[2], number, "label")
        elif words[0] == "edge":
            if len(words) != 4:
                raise FormatError("expected 'edge <u> <v> <push|pop|eps>'", number)
            u = _int(words[1], number, "vertex")
            v = _int(words[2], number, "vertex")
            _check_vertex(u, n, number)
            _check_vertex(v, n, number)
            try:
                kind = EdgeKind(words[3])
            except ValueError:
                raise FormatError(f"unknown edge label {words[3]!r}", number) from None
            edges.append((u, v, kind))
        elif "=" in words[0]:
            s, t = _endpoints(_assignments(content, number), number)
            _check_vertex(s, n, number)
            _check_vertex(t, n, number)
        else:
            raise FormatError(f"unknown statement {words[0]!r}", number)

    graph = LabeledGraph.build(labels, edges, k=k, directed=directed)
    return InstanceFile(graph=graph, variant=variant, s=s, t=t)


def _edge_lines(graph: LabeledGraph) -> list[str]:
    keep: list[Edge] = []
    for edge in graph.edges:
        if edge.u == edge.v and edge.kind is EdgeKind.EPS:
            continue
        if not graph.directed and edge.u > edge.v:
            continue
        keep.append(edge)
    keep.sort(key=lambda e: (e.u, e.v, e.kind.value))
    return [f"edge {e.u} {e.v} {e.kind.value}" for e in keep]


def dump_instance(instance: InstanceFile) -> str:
    graph = instance.graph
    lines = [
        INSTANCE_HEADER,
        f"n={graph.n} k={graph.k} directed={int(graph.directed)} variant={instance.variant.value}",
    ]
    lines.extend(f"label {v} {label}" for v, label in enumerate(graph.labels) if label != 1)
    lines.extend(_edge_lines(graph))
    if instance.s is not None and instance.t is not None:
        lines.append(f"s={instance.s} t={instance.t}")
    return "\n".join(lines) + "\n"


# =============================================================================
# Digraph files
# =============================================================================


def parse_digraph(text: str) -> DigraphFile:
    lines = _lines(text)
    number, header = next(lines, (1, ""))
    if header != DIGRAPH_HEADER:
        raise FormatError(f"expected header {DIGRAPH_HEADER!r}", number)
    number, size_line = next(lines, (number + 1, ""))
    size = _assignments(size_line, number)
    if set(size) != {"n"}:
        raise FormatError("expected 'n=<int>'", number)
    n = _int(size["n"], number, "n")
    if n < 1:
        raise FormatError("n must be positive", number)

    arcs: dict[tuple[int, int], None] = {}
    s: int | None = None
    t: int | None = None
    for number, content in lines:
        words = content.split()
        if words[0] == "arc":
            if len(words) != 3:
                raise FormatError("expected 'arc <u> <v>'", number)
            u = _int(words[1], number, "vertex")
            v = _int(words[2], number, "vertex")
            _check_vertex(u, n, number)
            _check_vertex(v, n, number)
            arcs[(u, v)] = None
        elif "=" in words[0]:
            s, t = _endpoints(_assignments(content, number), number)
            _check_vertex(s, n, number)
            _check_vertex(t, n, number)
        else:
            raise FormatError(f"unknown statement {words[0]!r}", number)
    return DigraphFile(digraph=Digraph(n=n, arcs=tuple(arcs)), s=s, t=t)


def dump_digraph(digraph_file: DigraphFile) -> str:
    digraph = digraph_file.digraph
    lines = [DIGRAPH_HEADER, f"n={digraph.n}"]
    lines.extend(f"arc {u} {v}" for u, v in sorted(set(digraph.arcs)))
    if digraph_file.s is not None and digraph_file.t is not None:
        lines.append(f"s={digraph_file.s} t={digraph_file.t}")
    return "\n".join(lines) + "\n"


# =============================================================================
# Closure dumps and certificates
# =============================================================================


def iter_closure_lines(standard: BoolMatrix, gap: BitMatrix) -> Iterator[str]:
    """Yield dump lines; E lines sort before G lines."""
    n = standard.shape[0]
    for a, b in np.argwhere(standard):
        yield f"E {a} {b}"
    for row, col in gap.nonzero():
        a, b = divmod(row, n)
        c, d = divmod(col, n)
        yield f"G {a} {b} {c} {d}"


def dump_closure(standard: BoolMatrix, gap: BitMatrix) -> str:
    return "".join(line + "\n" for line in iter_closure_lines(standard, gap))


def dump_certs(certs: Iterable[ReductionCert]) -> str:
    return "".join(cert.model_dump_json() + "\n" for cert in certs)


def parse_certs(text: str) -> list[ReductionCert]:
    return [ReductionCert.model_validate_json(line) for line in text.splitlines() if line.strip()]
