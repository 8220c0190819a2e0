"""
Realizability Domain Models
===========================

Pydantic v2 models for graphs, problem variants, validation reports,
reduction certificates and PRAM metrics.
All models are immutable (frozen) for safety and hashability.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from typing import Annotated, Self

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field

BoolMatrix = npt.NDArray[np.bool_]


# =============================================================================
# Edge labels
# =============================================================================


class EdgeKind(str, enum.Enum):
    """Edge label: stack push, stack pop, or no stack move."""

    PUSH = "push"
    POP = "pop"
    EPS = "eps"

    @property
    def reverse(self) -> EdgeKind:
        """Label the reverse edge carries in a symmetric graph."""
        if self is EdgeKind.PUSH:
            return EdgeKind.POP
        if self is EdgeKind.POP:
            return EdgeKind.PUSH
        return EdgeKind.EPS


class Edge(BaseModel):
    """Directed labeled edge u -> v."""

    model_config = ConfigDict(frozen=True)

    u: Annotated[int, Field(ge=0)]
    v: Annotated[int, Field(ge=0)]
    kind: EdgeKind

    def reversed(self) -> Edge:
        return Edge(u=self.v, v=self.u, kind=self.kind.reverse)


# =============================================================================
# Problem variants
# =============================================================================


class GrammarVariant(str, enum.Enum):
    """Realizable-string grammar used by the oracles."""

    STANDARD = "standard"
    SYMMETRIC_GAP = "symmetric-gap"
    ONE = "one"
    ONE_SYMMETRIC_GAP = "one-symmetric-gap"

    @property
    def allows_pop_push(self) -> bool:
        """True when ``a pop S push a`` is also a derivation rule."""
        return self in (GrammarVariant.SYMMETRIC_GAP, GrammarVariant.ONE_SYMMETRIC_GAP)

    @property
    def single_label(self) -> bool:
        return self in (GrammarVariant.ONE, GrammarVariant.ONE_SYMMETRIC_GAP)


class ProblemVariant(str, enum.Enum):
    """The six graph realizability problems.

    Columns: label count, standard symmetry (every edge has its reverse with
    the reversed label), gap symmetry (gap matrix closed under the three
    symmetric-gap identities).
    """

    LOGCFL = "logcfl"
    SLOGCFL = "slogcfl"
    SGSLOGCFL = "sgslogcfl"
    ONE_LOGCFL = "1logcfl"
    ONE_SLOGCFL = "1slogcfl"
    ONE_SGSLOGCFL = "1sgslogcfl"

    @property
    def single_label(self) -> bool:
        return self.value.startswith("1")

    @property
    def label_count(self) -> str:
        return "k = 1" if self.single_label else "k >= 2"

    @property
    def standard_symmetric(self) -> bool:
        return self not in (ProblemVariant.LOGCFL, ProblemVariant.ONE_LOGCFL)

    @property
    def gap_symmetric(self) -> bool:
        return self in (ProblemVariant.SGSLOGCFL, ProblemVariant.ONE_SGSLOGCFL)

    @property
    def grammar(self) -> GrammarVariant:
        if self.gap_symmetric:
            return GrammarVariant.ONE_SYMMETRIC_GAP if self.single_label else GrammarVariant.SYMMETRIC_GAP
        return GrammarVariant.ONE if self.single_label else GrammarVariant.STANDARD

    @property
    def display_name(self) -> str:
        return {
            ProblemVariant.LOGCFL: "LogCFL",
            ProblemVariant.SLOGCFL: "SLogCFL",
            ProblemVariant.SGSLOGCFL: "SGSLogCFL",
            ProblemVariant.ONE_LOGCFL: "1LogCFL",
            ProblemVariant.ONE_SLOGCFL: "1SLogCFL",
            ProblemVariant.ONE_SGSLOGCFL: "1SGSLogCFL",
        }[self]


# =============================================================================
# Graphs
# =============================================================================


class LabeledGraph(BaseModel):
    """Vertex- and edge-labeled graph.

    Vertex labels are 1..k. ``directed=False`` records that the graph was
    declared symmetric: every push (u,v) has a pop (v,u) and every eps (u,v)
    has an eps (v,u). The edge tuple always lists both directions.
    """

    model_config = ConfigDict(frozen=True)

    n: Annotated[int, Field(ge=1)]
    k: Annotated[int, Field(ge=1)]
    labels: tuple[int, ...]
    edges: tuple[Edge, ...] = ()
    directed: bool = True

    def label_array(self) -> npt.NDArray[np.int64]:
        return np.asarray(self.labels, dtype=np.int64)

    def kind_matrix(self, kind: EdgeKind) -> BoolMatrix:
        """n x n boolean matrix of the edges with the given label."""
        matrix = np.zeros((self.n, self.n), dtype=np.bool_)
        for edge in self.edges:
            if edge.kind is kind and edge.u < self.n and edge.v < self.n:
                matrix[edge.u, edge.v] = True
        return matrix

    def edge_kinds(self) -> dict[tuple[int, int], set[EdgeKind]]:
        """Labels present on each ordered vertex pair."""
        kinds: dict[tuple[int, int], set[EdgeKind]] = {}
        for edge in self.edges:
            kinds.setdefault((edge.u, edge.v), set()).add(edge.kind)
        return kinds

    def with_edges(self, edges: Iterable[Edge]) -> Self:
        return self.model_copy(update={"edges": tuple(edges)})

    @classmethod
    def build(
        cls,
        labels: Iterable[int],
        edges: Iterable[tuple[int, int, EdgeKind | str]],
        k: int | None = None,
        directed: bool = True,
        reflexive: bool = True,
    ) -> Self:
        """Convenience constructor.

        Adds eps self-loops when ``reflexive`` is set, the reverse of every
        edge when ``directed`` is False, and drops exact duplicates.
        """
        label_tuple = tuple(labels)
        n = len(label_tuple)
        seen: dict[tuple[int, int, EdgeKind], None] = {}
        for u, v, kind in edges:
            edge_kind = EdgeKind(kind)
            seen[(u, v, edge_kind)] = None
            if not directed:
                seen[(v, u, edge_kind.reverse)] = None
        if reflexive:
            for u in range(n):
                seen[(u, u, EdgeKind.EPS)] = None
        return cls(
            n=n,
            k=k if k is not None else max(label_tuple, default=1),
            labels=label_tuple,
            edges=tuple(Edge(u=u, v=v, kind=kind) for u, v, kind in seen),
            directed=directed,
        )


class Digraph(BaseModel):
    """Unlabeled directed graph for the balanced-walk problems."""

    model_config = ConfigDict(frozen=True)

    n: Annotated[int, Field(ge=1)]
    arcs: tuple[tuple[int, int], ...] = ()

    def adjacency(self) -> BoolMatrix:
        matrix = np.zeros((self.n, self.n), dtype=np.bool_)
        for u, v in self.arcs:
            matrix[u, v] = True
        return matrix

    @classmethod
    def from_adjacency(cls, matrix: BoolMatrix) -> Self:
        rows, cols = np.nonzero(matrix)
        return cls(n=int(matrix.shape[0]), arcs=tuple((int(u), int(v)) for u, v in zip(rows, cols, strict=True)))


# =============================================================================
# Reports
# =============================================================================


class ValidationReport(BaseModel):
    """Outcome of structural validation; empty violations means accepted."""

    model_config = ConfigDict(frozen=True)

    violations: tuple[str, ...] = ()

    @property
    def accepted(self) -> bool:
        return not self.violations


class ReductionCert(BaseModel):
    """Record of one reduction: what it came from and how vertices map.

    ``vertex_map[i]`` is the target vertex that source vertex ``i`` became.
    """

    model_config = ConfigDict(frozen=True)

    source: str
    target: str
    source_n: int
    target_n: int
    vertex_map: tuple[int, ...]
    s: int | None = None
    t: int | None = None
    params: dict[str, int] = Field(default_factory=dict)


class PramMetrics(BaseModel):
    """Counters reported by the PRAM Connect simulation."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n: int
    outer_iterations: int = Field(alias="outerIterations")
    pointer_jump_steps: int = Field(alias="pointerJumpSteps")
    logical_processors: int = Field(alias="logicalProcessors")
    jump_rounds: int = Field(alias="jumpRounds")
