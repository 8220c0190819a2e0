"""Seeded sweeps: reductions against direct graph algorithms.

Run with ``pytest -m slow``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable

import numpy as np
import pytest

from realizability.closure import query, transitive_closure
from realizability.generators import gen_random, gen_theta_n2, random_digraph
from realizability.models import BoolMatrix, Digraph, ProblemVariant
from realizability.oracle import BalanceMode, balanced_lengths, balanced_walk_dp
from realizability.reductions import (
    InstanceReduction,
    balanced_to_1sgs,
    eliminate_epsilon,
    positive_balanced_to_1s,
    stconn_to_1logcfl,
)

pytestmark = pytest.mark.slow


def _bfs_reachability(digraph: Digraph) -> BoolMatrix:
    successors: list[list[int]] = [[] for _ in range(digraph.n)]
    for u, v in digraph.arcs:
        successors[u].append(v)
    reach = np.zeros((digraph.n, digraph.n), dtype=np.bool_)
    for source in range(digraph.n):
        reach[source, source] = True
        queue = deque([source])
        while queue:
            for v in successors[queue.popleft()]:
                if not reach[source, v]:
                    reach[source, v] = True
                    queue.append(v)
    return reach


def _walk_table(digraph: Digraph, mode: BalanceMode) -> BoolMatrix:
    bound = 4 * digraph.n**2
    return np.stack([balanced_lengths(digraph, s, bound, mode) >= 0 for s in range(digraph.n)])


@pytest.mark.parametrize(
    ("mode", "reduce"),
    [(BalanceMode.BALANCED, balanced_to_1sgs), (BalanceMode.POSITIVE, positive_balanced_to_1s)],
    ids=["balanced", "positive"],
)
def test_walk_reductions_match_dp(mode: BalanceMode, reduce: Callable[[Digraph], InstanceReduction]) -> None:
    for seed in range(200):
        digraph = random_digraph(2 + seed % 7, 0.2 + 0.05 * (seed % 4), seed)
        closure = transitive_closure(reduce(digraph).instance).standard
        assert np.array_equal(closure, _walk_table(digraph, mode)), seed


def test_stconn_matches_bfs() -> None:
    for seed in range(200):
        digraph = random_digraph(2 + seed % 9, 0.2, seed)
        closure = transitive_closure(stconn_to_1logcfl(digraph).instance).standard
        n = digraph.n
        assert np.array_equal(closure[:n, :n], _bfs_reachability(digraph)), seed


@pytest.mark.parametrize("variant", [ProblemVariant.LOGCFL, ProblemVariant.SLOGCFL], ids=["logcfl", "slogcfl"])
def test_eps_elimination_keeps_closure(variant: ProblemVariant) -> None:
    for seed in range(100):
        instance = gen_random(2 + seed % 5, 1 + seed % 2, variant, 0.3, seed)
        before = transitive_closure(instance).standard
        after = transitive_closure(eliminate_epsilon(instance).instance).standard
        n = instance.n
        assert np.array_equal(after[:n, :n], before), seed


@pytest.mark.parametrize(("n", "expected"), [(8, 20), (12, 42), (16, 72)])
def test_theta_family(n: int, expected: int) -> None:
    problem = gen_theta_n2(n)
    assert balanced_walk_dp(problem.digraph, problem.s, problem.t, 4 * n * n) == expected
    assert balanced_walk_dp(problem.digraph, problem.s, problem.t, expected - 1) is None
    reduction = balanced_to_1sgs(problem.digraph, problem.s, problem.t)
    assert query(transitive_closure(reduction.instance), problem.s, problem.t)
