"""
Reductions
==========

Instance-to-instance constructions between the realizability variants and
the balanced-walk problems. Every construction keeps original vertices at
their indices, appends fresh vertices after them and returns a
ReductionCert recording the mapping.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from realizability.config import DEFAULT_MAX_VERTICES
from realizability.core import Instance, check_vertex, initialize
from realizability.exceptions import ParameterError
from realizability.models import Digraph, Edge, EdgeKind, LabeledGraph, ProblemVariant, ReductionCert

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InstanceReduction:
    instance: Instance
    s: int | None
    t: int | None
    cert: ReductionCert


@dataclass(frozen=True)
class DigraphReduction:
    digraph: Digraph
    s: int | None
    t: int | None
    cert: ReductionCert


REDUCTION_NAMES = (
    "eliminate-epsilon",
    "stconn-to-1logcfl",
    "balanced-to-1sgs",
    "1sgs-to-balanced",
    "positive-balanced-to-1s",
    "k-balanced",
)


def _identity_cert(source: str, target: str, source_n: int, target_n: int, **params: int) -> ReductionCert:
    return ReductionCert(
        source=source,
        target=target,
        source_n=source_n,
        target_n=target_n,
        vertex_map=tuple(range(source_n)),
        params=params,
    )


def _endpoints(n: int, s: int | None, t: int | None) -> None:
    for v in (s, t):
        if v is not None:
            check_vertex(n, v)


# =============================================================================
# Epsilon elimination
# =============================================================================


def eliminate_epsilon(
    instance: Instance,
    s: int | None = None,
    t: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> InstanceReduction:
    """Replace every non-loop eps edge by push/pop through a fresh vertex labeled k+1.

    Both directions of an eps pair share one fresh vertex, so symmetric
    instances stay symmetric.
    """
    if instance.variant not in (ProblemVariant.LOGCFL, ProblemVariant.SLOGCFL):
        raise ParameterError(
            f"eps elimination needs a logcfl or slogcfl instance, got {instance.variant.value}",
            "INVALID_VARIANT",
        )
    graph = instance.graph
    _endpoints(graph.n, s, t)
    fresh_label = graph.k + 1
    middle: dict[frozenset[int], int] = {}
    edges: list[Edge] = []
    for edge in sorted(graph.edges, key=lambda e: (e.u, e.v, e.kind.value)):
        if edge.kind is not EdgeKind.EPS or edge.u == edge.v:
            edges.append(edge)
            continue
        pair = frozenset((edge.u, edge.v))
        if pair not in middle:
            middle[pair] = graph.n + len(middle)
        w = middle[pair]
        edges.append(Edge(u=edge.u, v=w, kind=EdgeKind.PUSH))
        edges.append(Edge(u=w, v=edge.v, kind=EdgeKind.POP))

    n = graph.n + len(middle)
    edges.extend(Edge(u=w, v=w, kind=EdgeKind.EPS) for w in middle.values())
    target = LabeledGraph(
        n=n,
        k=fresh_label,
        labels=graph.labels + (fresh_label,) * len(middle),
        edges=tuple(edges),
        directed=graph.directed,
    )
    logger.debug("eps elimination added %d vertices", len(middle))
    cert = _identity_cert(instance.variant.value, instance.variant.value, graph.n, n, eliminated=len(middle))
    cert = cert.model_copy(update={"s": s, "t": t})
    return InstanceReduction(initialize(target, instance.variant, max_vertices), s, t, cert)


# =============================================================================
# Digraph -> single-label instances
# =============================================================================


def stconn_to_1logcfl(
    digraph: Digraph,
    s: int | None = None,
    t: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> InstanceReduction:
    """Split every arc u -> v (u != v) into push(u,w), pop(w,v) through a fresh w."""
    _endpoints(digraph.n, s, t)
    edges: list[Edge] = []
    arcs = sorted({(u, v) for u, v in digraph.arcs if u != v})
    for index, (u, v) in enumerate(arcs):
        w = digraph.n + index
        edges.append(Edge(u=u, v=w, kind=EdgeKind.PUSH))
        edges.append(Edge(u=w, v=v, kind=EdgeKind.POP))
    n = digraph.n + len(arcs)
    edges.extend(Edge(u=v, v=v, kind=EdgeKind.EPS) for v in range(n))
    graph = LabeledGraph(n=n, k=1, labels=(1,) * n, edges=tuple(edges), directed=True)
    cert = _identity_cert("stconn", ProblemVariant.ONE_LOGCFL.value, digraph.n, n).model_copy(update={"s": s, "t": t})
    return InstanceReduction(initialize(graph, ProblemVariant.ONE_LOGCFL, max_vertices), s, t, cert)


def _balanced_labeling(digraph: Digraph) -> LabeledGraph:
    """Opposite arcs become eps both ways; a lone arc (u,v) becomes push(u,v) and pop(v,u)."""
    arcs = {(u, v) for u, v in digraph.arcs if u != v}
    edges: list[Edge] = []
    for u, v in sorted(arcs):
        if (v, u) in arcs:
            edges.append(Edge(u=u, v=v, kind=EdgeKind.EPS))
        else:
            edges.append(Edge(u=u, v=v, kind=EdgeKind.PUSH))
            edges.append(Edge(u=v, v=u, kind=EdgeKind.POP))
    edges.extend(Edge(u=v, v=v, kind=EdgeKind.EPS) for v in range(digraph.n))
    return LabeledGraph(n=digraph.n, k=1, labels=(1,) * digraph.n, edges=tuple(edges), directed=False)


def balanced_to_1sgs(
    digraph: Digraph,
    s: int | None = None,
    t: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> InstanceReduction:
    """Balanced s-t walks become realizable pairs of a 1sgslogcfl instance."""
    _endpoints(digraph.n, s, t)
    variant = ProblemVariant.ONE_SGSLOGCFL
    cert = _identity_cert("balanced", variant.value, digraph.n, digraph.n).model_copy(update={"s": s, "t": t})
    return InstanceReduction(initialize(_balanced_labeling(digraph), variant, max_vertices), s, t, cert)


def positive_balanced_to_1s(
    digraph: Digraph,
    s: int | None = None,
    t: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> InstanceReduction:
    """Same labeling as balanced_to_1sgs, read with the grammar lacking ``pop S push``."""
    _endpoints(digraph.n, s, t)
    variant = ProblemVariant.ONE_SLOGCFL
    cert = _identity_cert("positive-balanced", variant.value, digraph.n, digraph.n).model_copy(
        update={"s": s, "t": t}
    )
    return InstanceReduction(initialize(_balanced_labeling(digraph), variant, max_vertices), s, t, cert)


def ustconn_embedding(digraph: Digraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Instance:
    """Undirected connectivity as an all-eps single-label symmetric instance."""
    edges = {(u, v) for u, v in digraph.arcs} | {(v, u) for u, v in digraph.arcs}
    graph = LabeledGraph.build((1,) * digraph.n, ((u, v, EdgeKind.EPS) for u, v in sorted(edges)), k=1, directed=False)
    return initialize(graph, ProblemVariant.ONE_SGSLOGCFL, max_vertices)


# =============================================================================
# Instances -> digraphs
# =============================================================================


def onesgs_to_balanced(instance: Instance, s: int | None = None, t: int | None = None) -> DigraphReduction:
    """eps pairs become opposite arcs; a push (u,v) with its pop (v,u) becomes the arc (u,v)."""
    graph = instance.graph
    if graph.k != 1 or graph.directed:
        raise ParameterError("expected a symmetric single-label instance", "INVALID_VARIANT")
    _endpoints(graph.n, s, t)
    arcs: set[tuple[int, int]] = set()
    for edge in graph.edges:
        if edge.u == edge.v:
            continue
        if edge.kind is EdgeKind.EPS:
            arcs.update(((edge.u, edge.v), (edge.v, edge.u)))
        elif edge.kind is EdgeKind.PUSH:
            arcs.add((edge.u, edge.v))
    digraph = Digraph(n=graph.n, arcs=tuple(sorted(arcs)))
    cert = _identity_cert(instance.variant.value, "balanced", graph.n, graph.n).model_copy(update={"s": s, "t": t})
    return DigraphReduction(digraph, s, t, cert)


def k_balanced_reduce(digraph: Digraph, s: int, t: int, k: int) -> DigraphReduction:
    """Append a directed path t' -> x_2 -> ... -> t of k fresh arcs.

    A k-balanced s-t walk of length L exists exactly when a balanced
    s-t' walk of length L + k does. k = 0 leaves the graph alone with t' = t.
    """
    if k < 0:
        raise ParameterError(f"k must be non-negative, got {k}", "INVALID_PARAMETER")
    check_vertex(digraph.n, s, t)
    if k == 0:
        cert = _identity_cert("k-balanced", "balanced", digraph.n, digraph.n, k=0)
        return DigraphReduction(digraph, s, t, cert.model_copy(update={"s": s, "t": t}))

    chain = list(range(digraph.n, digraph.n + k)) + [t]
    arcs = list(digraph.arcs) + list(zip(chain[:-1], chain[1:], strict=True))
    target = Digraph(n=digraph.n + k, arcs=tuple(arcs))
    t_prime = chain[0]
    cert = _identity_cert("k-balanced", "balanced", digraph.n, target.n, k=k).model_copy(
        update={"s": s, "t": t_prime}
    )
    return DigraphReduction(target, s, t_prime, cert)
