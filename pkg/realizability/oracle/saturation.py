"""
Saturation oracle
=================

Worklist fixpoint over vertex pairs, independent of the matrix algebra:

    R[a,a]                                         reflexive
    R[a,b]  if eps(a,b)
    R[a,b]  if push(a,c), R[c,d], pop(d,b), L[a]=L[b], L[c]=L[d]
    R[a,b]  if pop(a,c), R[c,d], push(d,b), ...    symmetric-gap grammars
    R[a,b]  if R[a,m], R[m,b]

``saturate_gap`` decides the with-gap relation exactly by saturating a
two-copy graph joined by a single virtual eps edge c -> d'.
"""

from __future__ import annotations

import logging
from collections import deque

import numpy as np

from realizability.core import Instance, check_vertex
from realizability.models import BoolMatrix, Edge, EdgeKind, GrammarVariant, LabeledGraph

logger = logging.getLogger(__name__)


def _wrap_index(graph: LabeledGraph, opening: EdgeKind, closing: EdgeKind) -> tuple[list[list[int]], list[list[int]]]:
    """into[c] = sources a of opening(a,c); out_of[d] = targets b of closing(d,b)."""
    into: list[list[int]] = [[] for _ in range(graph.n)]
    out_of: list[list[int]] = [[] for _ in range(graph.n)]
    for edge in graph.edges:
        if edge.kind is opening:
            into[edge.v].append(edge.u)
        if edge.kind is closing:
            out_of[edge.u].append(edge.v)
    return into, out_of


def saturate_pairs(graph: LabeledGraph, grammar: GrammarVariant) -> BoolMatrix:
    """Realizable-pair relation of any labeled graph under the given grammar.

    Single-label grammars treat vertices labeled other than α1 as unusable.
    """
    n = graph.n
    labels = graph.labels
    allowed = [not grammar.single_label or label == 1 for label in labels]
    relation = np.zeros((n, n), dtype=np.bool_)
    worklist: deque[tuple[int, int]] = deque()

    def add(a: int, b: int) -> None:
        if not relation[a, b]:
            relation[a, b] = True
            worklist.append((a, b))

    wraps = [_wrap_index(graph, EdgeKind.PUSH, EdgeKind.POP)]
    if grammar.allows_pop_push:
        wraps.append(_wrap_index(graph, EdgeKind.POP, EdgeKind.PUSH))

    for a in range(n):
        if allowed[a]:
            add(a, a)
    for edge in graph.edges:
        if edge.kind is EdgeKind.EPS and labels[edge.u] == labels[edge.v] and allowed[edge.u]:
            add(edge.u, edge.v)

    processed = 0
    while worklist:
        c, d = worklist.popleft()
        processed += 1
        for into, out_of in wraps:
            for a in into[c]:
                for b in out_of[d]:
                    if labels[a] == labels[b] and allowed[a]:
                        add(a, b)
        # (c,d) then (d,w)
        for w in np.flatnonzero(relation[d] & ~relation[c]):
            add(c, int(w))
        # (z,c) then (c,d)
        for z in np.flatnonzero(relation[:, c] & ~relation[:, d]):
            add(int(z), d)
    logger.debug("saturation over %d vertices processed %d pairs", n, processed)
    return relation


def saturate_realizable(instance: Instance) -> BoolMatrix:
    """Realizable pairs of an instance under its variant's grammar."""
    return saturate_pairs(instance.graph, instance.variant.grammar)


def saturate_gap(graph: LabeledGraph, grammar: GrammarVariant, c: int, d: int) -> BoolMatrix:
    """Exact with-gap relation for a fixed gap (c, d).

    result[a,b] holds when some walk a ~> c followed by some walk d ~> b
    has a realizable label string once c and d are identified. False
    everywhere when c and d carry different labels.
    """
    n = graph.n
    check_vertex(n, c, d)
    if graph.labels[c] != graph.labels[d]:
        return np.zeros((n, n), dtype=np.bool_)
    doubled = graph.edges + tuple(Edge(u=e.u + n, v=e.v + n, kind=e.kind) for e in graph.edges)
    doubled += (Edge(u=c, v=d + n, kind=EdgeKind.EPS),)
    two_copies = LabeledGraph(
        n=2 * n,
        k=graph.k,
        labels=graph.labels + graph.labels,
        edges=doubled,
        directed=True,
    )
    relation = saturate_pairs(two_copies, grammar)
    return relation[:n, n:].copy()


def saturate_gap_all(graph: LabeledGraph, grammar: GrammarVariant) -> BoolMatrix:
    """Exact with-gap relation as a flat gap matrix (one saturation per gap)."""
    n = graph.n
    tensor = np.zeros((n, n, n, n), dtype=np.bool_)
    for c in range(n):
        for d in range(n):
            tensor[:, :, c, d] = saturate_gap(graph, grammar, c, d)
    return tensor.reshape(n * n, n * n)
