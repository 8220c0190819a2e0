"""
Bounded walk enumeration
========================

Ground-truth checks that enumerate walks explicitly and test each label
string with the grammar recognizer. Exponential in the bound; a work budget
caps the number of walk states visited.

Reflexive eps loops are never traversed: inserting ``ε α`` after an ``α``
never changes whether a string is realizable.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator

from pydantic import BaseModel, ConfigDict, Field

from realizability.config import DEFAULT_ORACLE_WORK_BUDGET
from realizability.core import Instance, check_vertex
from realizability.exceptions import OracleBudgetExceeded
from realizability.models import EdgeKind, GrammarVariant, LabeledGraph
from realizability.oracle.grammar import LabelString, is_realizable_string

logger = logging.getLogger(__name__)


class WalkBound(BaseModel):
    """Maximum number of edges in an enumerated walk."""

    model_config = ConfigDict(frozen=True)

    max_len: int = Field(ge=0)


class _Budget:
    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise OracleBudgetExceeded(
                f"walk enumeration exceeded the work budget of {self.limit} states", "ORACLE_BUDGET"
            )


def _adjacency(graph: LabeledGraph) -> list[list[tuple[int, EdgeKind]]]:
    out: list[list[tuple[int, EdgeKind]]] = [[] for _ in range(graph.n)]
    for edge in sorted(graph.edges, key=lambda e: (e.u, e.v, e.kind.value)):
        if edge.u == edge.v and edge.kind is EdgeKind.EPS:
            continue
        out[edge.u].append((edge.v, edge.kind))
    return out


def _walk_strings(
    graph: LabeledGraph,
    source: int,
    target: int,
    max_len: int,
    budget: _Budget,
) -> Iterator[LabelString]:
    """Label strings of all walks source ~> target with at most max_len edges."""
    adjacency = _adjacency(graph)
    labels = graph.labels
    vertices: list[int] = [labels[source]]
    edges: list[EdgeKind] = []

    def extend(current: int) -> Iterator[LabelString]:
        budget.spend()
        if current == target:
            yield LabelString(tuple(vertices), tuple(edges))
        if len(edges) == max_len:
            return
        for following, kind in adjacency[current]:
            vertices.append(labels[following])
            edges.append(kind)
            yield from extend(following)
            vertices.pop()
            edges.pop()

    yield from extend(source)


def enumerate_walk_check(
    instance: Instance,
    s: int,
    t: int,
    bound: WalkBound,
    grammar: GrammarVariant | None = None,
    work_budget: int = DEFAULT_ORACLE_WORK_BUDGET,
) -> bool:
    """Does some walk s ~> t of at most bound.max_len edges spell a realizable string?"""
    check_vertex(instance.n, s, t)
    rules = grammar or instance.variant.grammar
    budget = _Budget(work_budget)
    seen: set[LabelString] = set()
    for string in _walk_strings(instance.graph, s, t, bound.max_len, budget):
        if string in seen:
            continue
        seen.add(string)
        if is_realizable_string(string, rules):
            logger.debug("walk check %d~>%d accepted after %d states", s, t, budget.used)
            return True
    logger.debug("walk check %d~>%d rejected after %d states", s, t, budget.used)
    return False


def gap_pair_check(
    instance: Instance,
    a: int,
    c: int,
    d: int,
    b: int,
    first: WalkBound,
    second: WalkBound,
    grammar: GrammarVariant | None = None,
    work_budget: int = DEFAULT_ORACLE_WORK_BUDGET,
) -> bool:
    """Do walks a ~> c and d ~> b exist whose strings realize once c and d are identified?"""
    check_vertex(instance.n, a, c, d, b)
    labels = instance.graph.labels
    if labels[a] != labels[b] or labels[c] != labels[d]:
        return False
    rules = grammar or instance.variant.grammar
    budget = _Budget(work_budget)
    prefixes = set(_walk_strings(instance.graph, a, c, first.max_len, budget))
    suffixes = set(_walk_strings(instance.graph, d, b, second.max_len, budget))
    for prefix in prefixes:
        for suffix in suffixes:
            budget.spend()
            joined = LabelString(prefix.vertices + suffix.vertices[1:], prefix.edges + suffix.edges)
            if is_realizable_string(joined, rules):
                return True
    return False
