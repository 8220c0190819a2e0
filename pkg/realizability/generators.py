"""
Instance generators
===================

Seeded random instances and digraphs, and the family whose only balanced
s-t walks have quadratic length. All randomness comes from
``numpy.random.default_rng(seed)``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from realizability.config import DEFAULT_MAX_VERTICES
from realizability.core import Instance, initialize
from realizability.exceptions import ParameterError
from realizability.models import Digraph, EdgeKind, LabeledGraph, ProblemVariant


class DigraphProblem(NamedTuple):
    digraph: Digraph
    s: int
    t: int


def _check_density(density: float) -> None:
    if not 0.0 <= density <= 1.0:
        raise ParameterError(f"density must lie in [0, 1], got {density}", "INVALID_PARAMETER")


def random_graph(n: int, k: int, variant: ProblemVariant, density: float, seed: int) -> LabeledGraph:
    """Random labeled graph honoring the variant's label count and symmetry.

    Directed variants draw every ordered pair independently; symmetric
    variants draw every unordered pair once and add the reverse edge.
    eps is only drawn between equally labeled vertices.
    """
    if n < 1 or k < 1:
        raise ParameterError("n and k must be positive", "INVALID_PARAMETER")
    if variant.single_label and k != 1:
        raise ParameterError(f"variant {variant.value} requires k=1", "INVALID_PARAMETER")
    _check_density(density)

    rng = np.random.default_rng(seed)
    labels = tuple(int(x) for x in rng.integers(1, k + 1, size=n))
    edges: list[tuple[int, int, EdgeKind]] = []
    symmetric = variant.standard_symmetric

    for u in range(n):
        for v in range(u + 1 if symmetric else 0, n):
            if u == v or rng.random() >= density:
                continue
            choices = [EdgeKind.PUSH, EdgeKind.POP]
            if labels[u] == labels[v]:
                choices.append(EdgeKind.EPS)
            edges.append((u, v, choices[int(rng.integers(len(choices)))]))

    return LabeledGraph.build(labels, edges, k=k, directed=not symmetric)


def gen_random(
    n: int,
    k: int,
    variant: ProblemVariant,
    density: float,
    seed: int,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Instance:
    """Deterministic pseudo-random instance; identical seeds give bit-identical matrices."""
    return initialize(random_graph(n, k, variant, density, seed), variant, max_vertices)


def random_digraph(n: int, density: float, seed: int, loops: bool = False) -> Digraph:
    if n < 1:
        raise ParameterError("n must be positive", "INVALID_PARAMETER")
    _check_density(density)
    rng = np.random.default_rng(seed)
    arcs = rng.random((n, n)) < density
    if not loops:
        np.fill_diagonal(arcs, False)
    return Digraph.from_adjacency(arcs)


def gen_theta_n2(n: int) -> DigraphProblem:
    """Digraph whose shortest balanced s-t walk has length n/2 + (n/2)^2.

    Vertices 0..n/2 form the directed path s = 0 -> ... -> n/2 = t. At path
    vertex v = ceil(n/4) hangs a cycle v, w_1, ..., w_{n/2-1} of n/2 edges;
    every cycle edge is neutral except the single arc (v, w_{n/2-1}). Each
    trip around the cycle through that arc backwards costs n/2 edges and
    lowers the balance by one, and the path raises it by n/2.
    """
    if n % 2 or n < 8:
        raise ParameterError(f"n must be even and at least 8, got {n}", "INVALID_PARAMETER")
    half = n // 2
    v = math.ceil(n / 4)
    cycle = [v] + [half + j for j in range(1, half)]

    arcs: list[tuple[int, int]] = [(i, i + 1) for i in range(half)]
    for a, b in zip(cycle[:-1], cycle[1:], strict=True):
        arcs.extend(((a, b), (b, a)))
    arcs.append((v, cycle[-1]))
    return DigraphProblem(Digraph(n=n, arcs=tuple(arcs)), 0, half)
