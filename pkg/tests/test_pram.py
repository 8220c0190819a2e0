"""Tests for the PRAM Connect simulation."""

from __future__ import annotations

import numpy as np
import pytest

from realizability.closure import ClosureMethod, transitive_closure
from realizability.core import Instance
from realizability.exceptions import MethodNotApplicableError, OuterBudgetExceeded, ParameterError
from realizability.generators import gen_random
from realizability.models import ProblemVariant
from realizability.pram import (
    PramState,
    check_rooted_pseudoforest,
    connect,
    default_jump_rounds,
    gap_hook,
    hook_roots,
    pointer_jump,
    run_round,
    standard_hook,
)


def _ints(*values: int) -> np.ndarray:
    return np.array(values, dtype=np.int64)


class TestForestPrimitives:
    def test_hook_roots_resolves_mutual_hooks(self) -> None:
        assert hook_roots(_ints(0, 1, 2), _ints(1, 0, 2)).tolist() == [0, 0, 2]

    def test_hook_roots_takes_member_minimum(self) -> None:
        # tree {0, 1} rooted at 1; member 0 wants 3, root 1 wants 2
        assert hook_roots(_ints(1, 1, 2, 3), _ints(3, 2, 2, 3)).tolist() == [1, 2, 2, 3]

    @pytest.mark.parametrize(
        ("parent", "expected"),
        [((0, 0, 1), True), ((0, 1, 2), True), ((1, 1), False), ((1, 0), False), ((0, 1, 1), True), ((0, 2, 2), False)],
        ids=["chain", "singletons", "root-not-minimum", "two-cycle", "two-trees", "second-root-not-minimum"],
    )
    def test_check_rooted_pseudoforest(self, parent: tuple[int, ...], expected: bool) -> None:
        assert check_rooted_pseudoforest(_ints(*parent)) is expected

    def test_pointer_jump(self) -> None:
        assert pointer_jump(_ints(0, 0, 1), 1).tolist() == [0, 0, 0]
        assert pointer_jump(_ints(0, 0, 1, 2), 1).tolist() == [0, 0, 0, 1]
        assert pointer_jump(_ints(0, 0, 1, 2), 0).tolist() == [0, 0, 1, 2]

    @pytest.mark.parametrize(("n", "expected"), [(1, 1), (2, 3), (3, 5), (4, 5), (5, 6)])
    def test_default_jump_rounds(self, n: int, expected: int) -> None:
        assert default_jump_rounds(n) == expected


class TestHooks:
    def test_initial_state(self, pop_push_sgs: Instance) -> None:
        state = PramState.from_instance(pop_push_sgs)
        assert state.x_standard.tolist() == [0, 1, 2]
        # unordered pairs share the id of their smaller ordering
        assert state.x_gap[2, 1] == state.x_gap[1, 2] == 5

    def test_standard_hook_sees_through_gap(self, pop_push_sgs: Instance) -> None:
        state = PramState.from_instance(pop_push_sgs)
        assert standard_hook(state, 2) == 0
        assert standard_hook(state, 1) == 1

    def test_gap_hook(self, pop_push_sgs: Instance) -> None:
        state = PramState.from_instance(pop_push_sgs)
        assert gap_hook(state, 1, 1) == (0, 0)

    def test_hook_range(self, pop_push_sgs: Instance) -> None:
        state = PramState.from_instance(pop_push_sgs)
        with pytest.raises(ParameterError):
            standard_hook(state, 3)
        with pytest.raises(ParameterError):
            gap_hook(state, 0, 5)

    def test_run_round_reports_change(self, pop_push_sgs: Instance) -> None:
        state = PramState.from_instance(pop_push_sgs)
        assert run_round(state, default_jump_rounds(3))
        assert state.outer_iterations == 1
        assert state.standard[0, 2]
        assert state.history


class TestConnect:
    def test_pop_push(self, pop_push_sgs: Instance) -> None:
        result = connect(pop_push_sgs)
        expected = transitive_closure(pop_push_sgs, ClosureMethod.SYMMETRIC)
        assert np.array_equal(result.closure.standard, expected.standard)
        assert result.closure.gap == expected.gap
        assert result.x_standard[2] == result.x_standard[0] == 0

    def test_metrics(self, pop_push_sgs: Instance) -> None:
        metrics = connect(pop_push_sgs).metrics
        assert metrics.n == 3
        assert metrics.logical_processors == 81
        assert metrics.jump_rounds == 5
        assert metrics.pointer_jump_steps == 2 * metrics.jump_rounds * metrics.outer_iterations

    def test_explicit_jump_rounds(self, pop_push_sgs: Instance) -> None:
        assert connect(pop_push_sgs, jump_rounds=2).metrics.jump_rounds == 2

    def test_deterministic(self, pop_push_sgs: Instance) -> None:
        first = connect(pop_push_sgs)
        second = connect(pop_push_sgs)
        assert first.metrics == second.metrics
        assert np.array_equal(first.x_gap, second.x_gap)

    @pytest.mark.parametrize("variant", [ProblemVariant.SGSLOGCFL, ProblemVariant.ONE_SGSLOGCFL])
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_matches_symmetric_closure(self, variant: ProblemVariant, seed: int) -> None:
        k = 1 if variant.single_label else 2
        instance = gen_random(5, k, variant, 0.4, seed)
        result = connect(instance)
        expected = transitive_closure(instance, ClosureMethod.SYMMETRIC)
        assert np.array_equal(result.closure.standard, expected.standard)
        assert result.closure.gap == expected.gap

    def test_needs_gap_symmetry(self, pop_push_s: Instance) -> None:
        with pytest.raises(MethodNotApplicableError):
            connect(pop_push_s)

    def test_outer_budget(self, pop_push_sgs: Instance) -> None:
        with pytest.raises(OuterBudgetExceeded) as exc_info:
            connect(pop_push_sgs, max_outer=1)
        assert exc_info.value.code == "OUTER_BUDGET"
