"""
Instance construction
=====================

Validation of labeled graphs, the initial standard and gap matrices,
symmetric-gap closure, unmatched-edge pruning and the undirected view of
digraphs used by the balanced-walk reductions.

Gap matrix layout: Gap[a,(c,d),b] lives at row ``a*n + b`` and column
``c*n + d`` of an n^2 x n^2 packed ``BitMatrix``. Unpacked and reshaped to
(n, n, n, n) it is indexed ``[a, b, c, d]``.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

import numpy as np

from realizability.bits import BitMatrix, IndexArray
from realizability.config import DEFAULT_MAX_VERTICES
from realizability.exceptions import InstanceTooLargeError, InstanceValidationError, ParameterError
from realizability.models import (
    BoolMatrix,
    Digraph,
    Edge,
    EdgeKind,
    LabeledGraph,
    ProblemVariant,
    ValidationReport,
)

logger = logging.getLogger(__name__)


# =============================================================================
# Gap indexing
# =============================================================================


@dataclass(frozen=True)
class GapIndex:
    """Flat row/column arithmetic for an n-vertex gap matrix."""

    n: int

    def row(self, a: int, b: int) -> int:
        return a * self.n + b

    def col(self, c: int, d: int) -> int:
        return c * self.n + d

    def position(self, a: int, c: int, d: int, b: int) -> tuple[int, int]:
        """(row, column) of Gap[a,(c,d),b]."""
        return self.row(a, b), self.col(c, d)

    def tuple_at(self, row: int, col: int) -> tuple[int, int, int, int]:
        """Inverse of position(): returns (a, c, d, b)."""
        a, b = divmod(row, self.n)
        c, d = divmod(col, self.n)
        return a, c, d, b


def as_tensor(gap: BitMatrix | BoolMatrix, n: int) -> BoolMatrix:
    """An unpacked [a, b, c, d] array; meant for small n."""
    dense = gap.to_bool() if isinstance(gap, BitMatrix) else gap
    return dense.reshape(n, n, n, n)


def pair_swap(n: int) -> IndexArray:
    """Flat pair ids with (p, q) and (q, p) exchanged."""
    ids = np.arange(n * n)
    result: IndexArray = (ids % n) * n + ids // n
    return result


def check_vertex(n: int, *vertices: int) -> None:
    for v in vertices:
        if not 0 <= v < n:
            raise ParameterError(f"vertex {v} out of range 0..{n - 1}", "INDEX_OUT_OF_RANGE")


# =============================================================================
# Instance
# =============================================================================


@dataclass(frozen=True)
class Instance:
    """Validated graph together with its initial matrices.

    ``standard`` is the n x n eps-edge matrix E; ``gap`` is the packed
    n^2 x n^2 initial gap matrix. Both are read-only.
    """

    graph: LabeledGraph
    variant: ProblemVariant
    standard: BoolMatrix
    gap: BitMatrix

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def k(self) -> int:
        return self.graph.k


# =============================================================================
# Validation
# =============================================================================


def validate(graph: LabeledGraph, variant: ProblemVariant) -> ValidationReport:
    """Check the structural invariants and return every violation found."""
    violations: list[str] = []
    n, k = graph.n, graph.k

    if len(graph.labels) != n:
        violations.append(f"expected {n} vertex labels, got {len(graph.labels)}")
    bad_labels = [i for i, label in enumerate(graph.labels) if not 1 <= label <= k]
    if bad_labels:
        violations.append(f"labels outside 1..{k} at vertices {bad_labels}")
    if variant.single_label and k != 1:
        violations.append(f"variant {variant.value} requires k=1, got k={k}")
    if variant.standard_symmetric and graph.directed:
        violations.append(f"variant {variant.value} requires a symmetric (directed=0) graph")

    out_of_range = [e for e in graph.edges if e.u >= n or e.v >= n]
    for edge in out_of_range:
        violations.append(f"edge ({edge.u},{edge.v}) has an endpoint outside 0..{n - 1}")
    if violations:
        return ValidationReport(violations=tuple(violations))

    kinds = graph.edge_kinds()
    for (u, v), present in sorted(kinds.items()):
        if len(present) > 1:
            names = ",".join(sorted(kind.value for kind in present))
            violations.append(f"multi-edge ({u},{v}) labeled {names}")

    missing = [u for u in range(n) if EdgeKind.EPS not in kinds.get((u, u), set())]
    if missing:
        violations.append(f"missing reflexive ε edges at vertices {missing}")

    labels = graph.labels
    for edge in graph.edges:
        if edge.kind is EdgeKind.EPS and labels[edge.u] != labels[edge.v]:
            violations.append(
                f"ε edge ({edge.u},{edge.v}) joins labels α{labels[edge.u]} and α{labels[edge.v]}"
            )

    if not graph.directed:
        for (u, v), present in sorted(kinds.items()):
            for kind in present:
                if kind.reverse not in kinds.get((v, u), set()):
                    what = "ε" if kind is EdgeKind.EPS else "push/pop"
                    violations.append(f"asymmetric {what} edge ({u},{v}) {kind.value}")

    return ValidationReport(violations=tuple(violations))


# =============================================================================
# Initialization
# =============================================================================


def swap_row_pairs(gap: BitMatrix, n: int) -> BitMatrix:
    """Gap[a,(c,d),b] -> Gap[b,(c,d),a]."""
    return gap.take_rows(pair_swap(n))


def swap_column_pairs(gap: BitMatrix, n: int) -> BitMatrix:
    """Gap[a,(c,d),b] -> Gap[a,(d,c),b]."""
    return gap.permute_columns(pair_swap(n))


def symmetrize_gap(gap: BitMatrix, n: int) -> BitMatrix:
    """Close a gap matrix under the three symmetric-gap identities.

    Swapping the row pair, swapping the column pair, and exchanging row and
    column pairs generate a group of order eight; closing under the first two
    and then the exchange reaches all of it.
    """
    closed = gap | swap_row_pairs(gap, n)
    closed |= swap_column_pairs(closed, n)
    closed |= closed.transpose()
    return closed


def initial_gap(graph: LabeledGraph) -> BitMatrix:
    """Initial gap matrix before any symmetric-gap closure, built one row slab per a."""
    n = graph.n
    labels = graph.label_array()
    push = graph.kind_matrix(EdgeKind.PUSH)
    pop = graph.kind_matrix(EdgeKind.POP)
    same = labels[:, None] == labels[None, :]
    gap = BitMatrix.zeros(n * n, n * n)
    for a in range(n):
        if not push[a].any():
            continue
        # rows (a, b), columns (c, d): push(a,c), pop(d,b), L[a]=L[b], L[c]=L[d]
        slab = (
            same[a][:, None, None]
            & (push[a][:, None] & same)[None, :, :]
            & pop.T[:, None, :]
        )
        gap.store_rows(a * n, slab.reshape(n, n * n))
    # Gap[a,(a,b),b] for all a, b; Gap[a,(a,a),a] is the b = a case.
    gap.set_diagonal()
    return gap


def initialize(
    graph: LabeledGraph,
    variant: ProblemVariant,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Instance:
    """Validate the graph and build its initial matrices.

    Raises:
        InstanceTooLargeError: n exceeds max_vertices
        InstanceValidationError: the graph fails validation
    """
    if graph.n > max_vertices:
        raise InstanceTooLargeError(
            f"instance has {graph.n} vertices, size cap is {max_vertices}", "INSTANCE_TOO_LARGE"
        )
    report = validate(graph, variant)
    if not report.accepted:
        raise InstanceValidationError(report)

    standard = graph.kind_matrix(EdgeKind.EPS)
    gap = initial_gap(graph)
    if variant.gap_symmetric:
        gap = symmetrize_gap(gap, graph.n)
    standard.setflags(write=False)
    gap.freeze()
    logger.debug(
        "initialized %s instance n=%d k=%d: |E|=%d |gap|=%d",
        variant.value,
        graph.n,
        graph.k,
        int(standard.sum()),
        gap.popcount(),
    )
    return Instance(graph=graph, variant=variant, standard=standard, gap=gap)


# =============================================================================
# Pruning
# =============================================================================


def _unmatched(graph: LabeledGraph) -> set[Edge]:
    """Push/pop edges with no opposite-kind partner carrying reversed labels.

    A push (u,v) labeled (i,j) needs a pop labeled (j,i); the pop (v,u) does
    not count since push(u,v) pop(v,u) only returns to u.
    """
    labels = graph.labels
    counts: dict[tuple[EdgeKind, int, int], int] = {}
    present = {(e.u, e.v, e.kind) for e in graph.edges}
    for edge in graph.edges:
        if edge.kind is not EdgeKind.EPS:
            key = (edge.kind, labels[edge.u], labels[edge.v])
            counts[key] = counts.get(key, 0) + 1

    removed: set[Edge] = set()
    for edge in graph.edges:
        if edge.kind is EdgeKind.EPS:
            continue
        partner = edge.kind.reverse
        partners = counts.get((partner, labels[edge.v], labels[edge.u]), 0)
        if (edge.v, edge.u, partner) in present:
            partners -= 1
        if partners == 0:
            removed.add(edge)
    return removed


def prune_unmatched(graph: LabeledGraph) -> LabeledGraph:
    """Drop push/pop edges that can never be matched, until nothing changes.

    Realizability of every vertex pair is unchanged and eps edges are kept.
    """
    current = graph
    passes = 0
    while True:
        removed = _unmatched(current)
        if not removed:
            break
        passes += 1
        current = current.with_edges(e for e in current.edges if e not in removed)
        logger.debug("prune pass %d removed %d edges", passes, len(removed))
    return current


# =============================================================================
# Undirected view of a digraph
# =============================================================================


class EdgeDirection(str, enum.Enum):
    """How traversing u -> v changes the balance of a walk."""

    NEUTRAL = "neutral"
    FORWARD = "forward"
    BACKWARD = "backward"

    @property
    def delta(self) -> int:
        return {EdgeDirection.NEUTRAL: 0, EdgeDirection.FORWARD: 1, EdgeDirection.BACKWARD: -1}[self]


def underlying_undirected(digraph: Digraph) -> dict[tuple[int, int], EdgeDirection]:
    """Classify every traversal u -> v along an edge of the underlying graph.

    A traversal is neutral when both arcs exist, forward when only (u,v)
    exists, and backward when only (v,u) exists. Self-loops are neutral.
    """
    arcs = set(digraph.arcs)
    classified: dict[tuple[int, int], EdgeDirection] = {}
    for u, v in arcs:
        if (v, u) in arcs:
            classified[(u, v)] = EdgeDirection.NEUTRAL
            classified[(v, u)] = EdgeDirection.NEUTRAL
        else:
            classified[(u, v)] = EdgeDirection.FORWARD
            classified[(v, u)] = EdgeDirection.BACKWARD
    return classified


def popcount(matrix: BitMatrix | BoolMatrix) -> int:
    if isinstance(matrix, BitMatrix):
        return matrix.popcount()
    return int(np.count_nonzero(matrix))
