"""
PRAM Connect simulation
=======================

Synchronous-round simulation of hook-and-contract connectivity over
vertices and over unordered vertex pairs. Each outer round

1. hooks every vertex (standard hook) and every pair (gap hook) to the
   smallest representative it can see across a closure bit,
2. lets every current root take the minimum hook among its members,
3. resolves mutual hooks so each tree roots at a self-loop on its minimum,
4. pointer-jumps a fixed number of rounds,
5. ORs co-membership into the standard and gap matrices.

Rounds repeat until nothing changes. Every "processor" is a numpy lane; the
counters only account for the rounds a real machine would spend.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from realizability.bits import BitMatrix
from realizability.closure import ClosureMethod, ClosureResult, default_max_iters
from realizability.core import Instance, as_tensor, check_vertex
from realizability.exceptions import MethodNotApplicableError, OuterBudgetExceeded, PramInvariantError
from realizability.models import BoolMatrix, PramMetrics

logger = logging.getLogger(__name__)

IntArray = npt.NDArray[np.int64]

_NONE = np.iinfo(np.int64).max


@dataclass
class PramState:
    """Mutable simulation state.

    ``gap`` is an unpacked copy, one boolean lane per simulated processor.
    ``x_standard[i]`` is the representative vertex of i. ``x_gap[i, j]`` is
    the flat id ``p * n + q`` of the representative pair of {i, j}.
    """

    standard: BoolMatrix
    gap: BoolMatrix
    x_standard: IntArray
    x_gap: IntArray
    outer_iterations: int = 0
    pointer_jump_steps: int = 0
    history: list[int] = field(default_factory=list)

    @property
    def n(self) -> int:
        return int(self.standard.shape[0])

    @classmethod
    def from_instance(cls, instance: Instance) -> PramState:
        n = instance.n
        ids = np.arange(n * n, dtype=np.int64).reshape(n, n)
        return cls(
            standard=instance.standard.copy(),
            gap=instance.gap.to_bool(),
            x_standard=np.arange(n, dtype=np.int64),
            x_gap=np.minimum(ids, ids.T),
        )


def default_jump_rounds(n: int) -> int:
    return max(1, math.ceil(math.log2(n * n))) + 1 if n > 1 else 1


# =============================================================================
# Hooks
# =============================================================================


def _min_or_own(candidates: IntArray, own: IntArray) -> IntArray:
    result: IntArray = np.where(candidates == _NONE, own, candidates)
    return result


def _masked_min(mask: BoolMatrix, values: IntArray, axis: int) -> IntArray:
    result: IntArray = np.where(mask, values, _NONE).min(axis=axis)
    return result


def standard_hooks(state: PramState) -> IntArray:
    """Hook candidate of every vertex.

    Candidates of i: X(j) for E*[i,j], and X(j) for Gap*[i,(k,k),j] with any
    k, restricted to X(j) != X(i).
    """
    n = state.n
    x = state.x_standard
    diagonal = np.arange(n)
    through_gap = as_tensor(state.gap, n)[:, :, diagonal, diagonal].any(axis=2)
    visible = (state.standard | through_gap) & (x[None, :] != x[:, None])
    return _min_or_own(_masked_min(visible, np.broadcast_to(x[None, :], (n, n)), axis=1), x)


def gap_hooks(state: PramState) -> IntArray:
    """Hook candidate of every pair, as an n x n array of flat pair ids.

    Candidates of (i,j): X(k,l) for Gap*[i,(k,l),j]; X(k,j) for E*[i,k];
    X(i,k) for E*[j,k]. Only ids different from X(i,j) count.
    """
    n = state.n
    xg = state.x_gap
    flat = xg.reshape(n * n)

    across_gap = _masked_min(state.gap & (flat[None, :] != flat[:, None]), np.broadcast_to(flat, (n * n, n * n)), 1)

    # [i, k, j]: E*[i,k] moves the left end of (i,j) to k
    left_mask = state.standard[:, :, None] & (xg[None, :, :] != xg[:, None, :])
    left = _masked_min(left_mask, np.broadcast_to(xg[None, :, :], (n, n, n)), 1)

    # [i, j, k]: E*[j,k] moves the right end of (i,j) to k
    right_mask = state.standard[None, :, :] & (xg[:, None, :] != xg[:, :, None])
    right = _masked_min(right_mask, np.broadcast_to(xg[:, None, :], (n, n, n)), 2)

    candidates = np.minimum(np.minimum(across_gap.reshape(n, n), left), right)
    return _min_or_own(candidates, xg)


def standard_hook(state: PramState, i: int) -> int:
    check_vertex(state.n, i)
    return int(standard_hooks(state)[i])


def gap_hook(state: PramState, i: int, j: int) -> tuple[int, int]:
    """Representative pair the pair (i, j) hooks to."""
    check_vertex(state.n, i, j)
    p, q = divmod(int(gap_hooks(state)[i, j]), state.n)
    return p, q


# =============================================================================
# Hooking and contraction
# =============================================================================


def hook_roots(x: IntArray, hooks: IntArray) -> IntArray:
    """Every root takes the minimum hook among its members; roots without one stay.

    Two roots that pick each other keep the smaller as a self-loop, so the
    result is a rooted forest whose roots are the tree minima.
    """
    size = x.shape[0]
    temp = np.full(size, _NONE, dtype=np.int64)
    moving = hooks != x
    np.minimum.at(temp, x[moving], hooks[moving])
    temp = np.where(temp == _NONE, x, temp)

    index = np.arange(size, dtype=np.int64)
    mutual = (temp[temp] == index) & (index < temp)
    temp[mutual] = index[mutual]
    return temp


def check_rooted_pseudoforest(parent: IntArray) -> bool:
    """Every node reaches a self-loop, and every root is its tree's minimum."""
    size = parent.shape[0]
    nodes = np.arange(size, dtype=np.int64)
    root = parent.copy()
    for _ in range(max(1, math.ceil(math.log2(size + 1))) + 1):
        root = root[root]
    if not np.array_equal(parent[root], root):
        return False
    minima = np.full(size, _NONE, dtype=np.int64)
    np.minimum.at(minima, root, nodes)
    tops = np.unique(root)
    return bool(np.array_equal(minima[tops], tops))


def pointer_jump(parent: IntArray, rounds: int) -> IntArray:
    """parent <- parent[parent], ``rounds`` times."""
    result = parent.copy()
    for _ in range(rounds):
        result = result[result]
    return result


def _contract(state: PramState, x: IntArray, hooks: IntArray, rounds: int, name: str) -> IntArray:
    """Hook, check the forest shape, jump, and take the smaller of jumped and its parent."""
    temp = hook_roots(x, hooks)
    if not check_rooted_pseudoforest(temp):
        raise PramInvariantError(
            f"{name} pointers are not a rooted pseudoforest after round {state.outer_iterations}",
            "PRAM_INVARIANT",
        )
    jumped = pointer_jump(temp, rounds)
    state.pointer_jump_steps += rounds
    result: IntArray = np.minimum(jumped, temp[jumped])
    return result


# =============================================================================
# Driver
# =============================================================================


@dataclass(frozen=True)
class PramResult:
    closure: ClosureResult
    metrics: PramMetrics
    x_standard: IntArray
    x_gap: IntArray


def run_round(state: PramState, rounds: int) -> bool:
    """One outer round; returns True when anything changed."""
    n = state.n
    state.outer_iterations += 1
    before = (state.standard.copy(), state.gap.copy(), state.x_standard.copy(), state.x_gap.copy())

    s_hooks = standard_hooks(state)
    g_hooks = gap_hooks(state).reshape(n * n)

    state.x_standard = _contract(state, state.x_standard, s_hooks, rounds, "vertex")
    state.x_gap = _contract(state, state.x_gap.reshape(n * n), g_hooks, rounds, "pair").reshape(n, n)

    x = state.x_standard
    flat = state.x_gap.reshape(n * n)
    state.standard |= x[:, None] == x[None, :]
    state.gap |= flat[:, None] == flat[None, :]

    components = int(np.unique(x).size)
    state.history.append(components)
    logger.debug(
        "pram round %d: %d vertex components, %d pair components",
        state.outer_iterations,
        components,
        int(np.unique(flat).size),
    )
    after = (state.standard, state.gap, state.x_standard, state.x_gap)
    return not all(np.array_equal(old, new) for old, new in zip(before, after, strict=True))


def connect(instance: Instance, jump_rounds: int | None = None, max_outer: int | None = None) -> PramResult:
    """Run outer rounds until the state stops changing.

    Raises:
        MethodNotApplicableError: the variant has no gap symmetry
        OuterBudgetExceeded: no fixpoint within max_outer rounds
    """
    if not instance.variant.gap_symmetric:
        raise MethodNotApplicableError(
            f"PRAM Connect needs a gap-symmetric variant, got {instance.variant.value}", "METHOD_NOT_APPLICABLE"
        )
    n = instance.n
    rounds = jump_rounds if jump_rounds is not None else default_jump_rounds(n)
    budget = max_outer if max_outer is not None else default_max_iters(n)
    state = PramState.from_instance(instance)

    while run_round(state, rounds):
        if state.outer_iterations >= budget:
            raise OuterBudgetExceeded(f"no fixpoint after {budget} PRAM rounds (n={n})", "OUTER_BUDGET")

    state.standard.setflags(write=False)
    metrics = PramMetrics(
        n=n,
        outer_iterations=state.outer_iterations,
        pointer_jump_steps=state.pointer_jump_steps,
        logical_processors=n**4,
        jump_rounds=rounds,
    )
    closure = ClosureResult(
        standard=state.standard,
        gap=BitMatrix.from_bool(state.gap).freeze(),
        iterations=state.outer_iterations,
        method=ClosureMethod.SYMMETRIC,
    )
    return PramResult(closure=closure, metrics=metrics, x_standard=state.x_standard, x_gap=state.x_gap)
