"""Tests for the seeded generators."""

from __future__ import annotations

import numpy as np
import pytest

from realizability.core import validate
from realizability.exceptions import InstanceTooLargeError, ParameterError
from realizability.generators import gen_random, gen_theta_n2, random_digraph, random_graph
from realizability.models import EdgeKind, ProblemVariant


class TestRandomGraph:
    def test_same_seed_same_instance(self) -> None:
        first = gen_random(6, 2, ProblemVariant.LOGCFL, 0.4, seed=1)
        second = gen_random(6, 2, ProblemVariant.LOGCFL, 0.4, seed=1)
        assert first.graph == second.graph
        assert first.gap == second.gap
        assert np.array_equal(first.standard, second.standard)

    def test_different_seeds_differ(self) -> None:
        graphs = {random_graph(6, 2, ProblemVariant.LOGCFL, 0.5, seed) for seed in range(5)}
        assert len(graphs) > 1

    @pytest.mark.parametrize("variant", list(ProblemVariant), ids=[v.value for v in ProblemVariant])
    def test_generated_graphs_validate(self, variant: ProblemVariant) -> None:
        k = 1 if variant.single_label else 3
        for seed in range(5):
            graph = random_graph(7, k, variant, 0.5, seed)
            assert validate(graph, variant).accepted
            assert graph.directed is not variant.standard_symmetric

    def test_eps_only_between_equal_labels(self) -> None:
        graph = random_graph(8, 3, ProblemVariant.LOGCFL, 1.0, seed=2)
        for edge in graph.edges:
            if edge.kind is EdgeKind.EPS:
                assert graph.labels[edge.u] == graph.labels[edge.v]

    def test_zero_density_leaves_only_loops(self) -> None:
        graph = random_graph(4, 1, ProblemVariant.ONE_LOGCFL, 0.0, seed=0)
        assert all(edge.u == edge.v for edge in graph.edges)

    @pytest.mark.parametrize(
        ("n", "k", "variant", "density"),
        [
            (4, 2, ProblemVariant.ONE_LOGCFL, 0.5),
            (0, 1, ProblemVariant.LOGCFL, 0.5),
            (4, 1, ProblemVariant.LOGCFL, 1.5),
            (4, 1, ProblemVariant.LOGCFL, -0.1),
        ],
        ids=["single-label-k", "empty", "density-high", "density-low"],
    )
    def test_bad_parameters(self, n: int, k: int, variant: ProblemVariant, density: float) -> None:
        with pytest.raises(ParameterError):
            random_graph(n, k, variant, density, seed=0)

    def test_size_cap(self) -> None:
        with pytest.raises(InstanceTooLargeError):
            gen_random(9, 1, ProblemVariant.LOGCFL, 0.2, seed=0, max_vertices=8)


class TestRandomDigraph:
    def test_deterministic(self) -> None:
        assert random_digraph(6, 0.3, seed=4) == random_digraph(6, 0.3, seed=4)

    def test_loops_off_by_default(self) -> None:
        digraph = random_digraph(5, 1.0, seed=0)
        assert all(u != v for u, v in digraph.arcs)
        assert len(digraph.arcs) == 20

    def test_loops_allowed(self) -> None:
        assert len(random_digraph(3, 1.0, seed=0, loops=True).arcs) == 9

    def test_bad_density(self) -> None:
        with pytest.raises(ParameterError):
            random_digraph(3, 2.0, seed=0)


class TestThetaFamily:
    def test_shape(self) -> None:
        problem = gen_theta_n2(8)
        assert problem.digraph.n == 8
        assert (problem.s, problem.t) == (0, 4)
        # path 0..4, neutral cycle edges both ways, one lone arc closing the cycle
        assert len(problem.digraph.arcs) == 4 + 6 + 1

    @pytest.mark.parametrize("n", [6, 9, 0])
    def test_rejects_bad_sizes(self, n: int) -> None:
        with pytest.raises(ParameterError):
            gen_theta_n2(n)
