"""
Balanced walks
==============

Layered reachability over (vertex, balance) in the underlying undirected
graph of a digraph. Traversing an arc forward adds one, against its
direction subtracts one, and along a pair of opposite arcs adds nothing.
"""

from __future__ import annotations

import enum
import logging

import numpy as np
import numpy.typing as npt

from realizability.core import check_vertex
from realizability.exceptions import ParameterError
from realizability.models import BoolMatrix, Digraph

logger = logging.getLogger(__name__)


class BalanceMode(str, enum.Enum):
    """Which walks count.

    BALANCED: final balance 0.
    POSITIVE: final balance 0 and every prefix non-negative.
    K_BALANCED / POSITIVE_K_BALANCED: final balance k.
    """

    BALANCED = "balanced"
    POSITIVE = "positive"
    K_BALANCED = "k-balanced"
    POSITIVE_K_BALANCED = "positive-k-balanced"

    @property
    def positive(self) -> bool:
        return self in (BalanceMode.POSITIVE, BalanceMode.POSITIVE_K_BALANCED)

    @property
    def counts_k(self) -> bool:
        return self in (BalanceMode.K_BALANCED, BalanceMode.POSITIVE_K_BALANCED)


def _step_matrices(digraph: Digraph) -> tuple[npt.NDArray[np.int32], npt.NDArray[np.int32], npt.NDArray[np.int32]]:
    """Neutral, forward and backward traversal matrices; self-loops are neutral."""
    arcs = digraph.adjacency()
    neutral = arcs & arcs.T
    forward = arcs & ~arcs.T
    backward = forward.T
    return neutral.astype(np.int32), forward.astype(np.int32), backward.astype(np.int32)


def _reach_step(
    reach: BoolMatrix,
    neutral: npt.NDArray[np.int32],
    forward: npt.NDArray[np.int32],
    backward: npt.NDArray[np.int32],
) -> BoolMatrix:
    """reach[v, b] -> next[v', b + delta] along every traversal v -> v'."""
    layer = reach.astype(np.int32)
    following = (neutral.T @ layer) > 0
    up = (forward.T @ layer) > 0
    down = (backward.T @ layer) > 0
    following[:, 1:] |= up[:, :-1]
    following[:, :-1] |= down[:, 1:]
    return following


def balanced_lengths(
    digraph: Digraph,
    source: int,
    max_len: int,
    mode: BalanceMode = BalanceMode.BALANCED,
    k: int = 0,
) -> npt.NDArray[np.int64]:
    """Minimal qualifying walk length from source to every vertex, -1 where none exists."""
    check_vertex(digraph.n, source)
    if max_len < 0 or k < 0:
        raise ParameterError("max_len and k must be non-negative", "INVALID_PARAMETER")
    target_balance = k if mode.counts_k else 0

    offset = 0 if mode.positive else max_len
    width = max_len + 1 + offset
    reach = np.zeros((digraph.n, width), dtype=np.bool_)
    reach[source, offset] = True
    goal = offset + target_balance

    best = np.full(digraph.n, -1, dtype=np.int64)
    if target_balance == 0:
        best[source] = 0
    neutral, forward, backward = _step_matrices(digraph)

    for length in range(1, max_len + 1):
        reach = _reach_step(reach, neutral, forward, backward)
        if goal < width:
            hit = reach[:, goal] & (best < 0)
            best[hit] = length
        if not reach.any():
            break
    return best


def balanced_walk_dp(
    digraph: Digraph,
    s: int,
    t: int,
    max_len: int,
    mode: BalanceMode = BalanceMode.BALANCED,
    k: int = 0,
) -> int | None:
    """Length of the shortest qualifying s ~> t walk with at most max_len edges, or None."""
    check_vertex(digraph.n, s, t)
    length = int(balanced_lengths(digraph, s, max_len, mode, k)[t])
    logger.debug("%s walk %d~>%d within %d: %s", mode.value, s, t, max_len, length)
    return None if length < 0 else length
