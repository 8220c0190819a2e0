"""
Transitive closure
==================

Repeated squaring of the (gap, standard) matrix pair until nothing changes.

Methods:
    - square: the compact two-equation squaring
    - simple: the seven products applied one after another
    - symmetric: four products plus symmetric-gap re-closure (gap-symmetric
      variants only)
"""

from __future__ import annotations

import enum
import logging
import math
import time
from collections.abc import Callable
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from realizability.bits import BitMatrix
from realizability.core import (
    GapIndex,
    Instance,
    as_tensor,
    check_vertex,
    popcount,
    swap_column_pairs,
    swap_row_pairs,
    symmetrize_gap,
)
from realizability.exceptions import GapSymmetryError, IterationBudgetExceeded, MethodNotApplicableError
from realizability.formats import dump_closure
from realizability.models import BoolMatrix
from realizability.tensor import ExtendMode, accumulate, compose, contract, extend, substitute

logger = logging.getLogger(__name__)


class ClosureMethod(str, enum.Enum):
    SQUARE = "square"
    SIMPLE = "simple"
    SYMMETRIC = "symmetric"


class MatrixPair(NamedTuple):
    """Gap matrix and standard matrix at one point of the squaring."""

    gap: BitMatrix
    standard: BoolMatrix

    @property
    def n(self) -> int:
        return int(self.standard.shape[0])

    def same_as(self, other: MatrixPair) -> bool:
        return self.gap == other.gap and bool(np.array_equal(self.standard, other.standard))


@dataclass(frozen=True)
class ClosureResult:
    standard: BoolMatrix
    gap: BitMatrix
    iterations: int
    method: ClosureMethod

    @property
    def n(self) -> int:
        return int(self.standard.shape[0])


IterationCallback = Callable[[int, MatrixPair, float], None]


def default_max_iters(n: int) -> int:
    return 8 * math.ceil(math.log2(n + 1)) + 8


# =============================================================================
# Squaring steps
# =============================================================================


def square_step(pair: MatrixPair) -> MatrixPair:
    """One Square application.

    E'   = E   + contract(Gap, compose(contract(Gap, E), E))
    Gap' = Gap + substitute(Gap, extend(substitute(Gap, Gap), E, AFTER_B))
               + substitute(Gap, extend(Gap, contract(Gap, E), BEFORE_A))
    """
    gap, standard = pair
    contracted = contract(gap, standard)

    new_standard = standard.copy()
    accumulate(new_standard, contract(gap, compose(contracted, standard)))

    new_gap = gap.copy()
    accumulate(new_gap, substitute(gap, extend(substitute(gap, gap), standard, ExtendMode.AFTER_B)))
    accumulate(new_gap, substitute(gap, extend(gap, contracted, ExtendMode.BEFORE_A)))
    return MatrixPair(new_gap, new_standard)


def square_step_explicit(pair: MatrixPair) -> MatrixPair:
    """Square written as the raw index sums; a reference for small n.

    E'[a,b]         |= Gap[a,(c,d),b] Gap[c,(e,f),g] E[e,f] E[g,d]
    Gap'[a,(c,d),b] |= Gap[a,(p,q),b] Gap[p,(r,s),u] Gap[r,(c,d),s] E[u,q]
                     + Gap[a,(p,q),b] Gap[p,(r,s),u] E[r,s] Gap[u,(c,d),q]
    """
    n = pair.n
    y = as_tensor(pair.gap, n).astype(np.int64)  # [a, b, c, d] = Gap[a,(c,d),b]
    e = pair.standard.astype(np.int64)

    standard = pair.standard | (np.einsum("abcd,cgef,ef,gd->ab", y, y, e, e, optimize=True) > 0)
    first = np.einsum("abpq,purs,rscd,uq->abcd", y, y, y, e, optimize=True)
    second = np.einsum("abpq,purs,rs,uqcd->abcd", y, y, e, y, optimize=True)
    gap = pair.gap | BitMatrix.from_bool(((first + second) > 0).reshape(n * n, n * n))
    return MatrixPair(gap, standard)


def simple_square_step(pair: MatrixPair) -> MatrixPair:
    """Compose, contract, extend after b and before a, substitute, extend into d and c.

    Each product is OR-accumulated into the running pair before the next one.
    """
    gap = pair.gap.copy()
    standard = pair.standard.copy()
    accumulate(standard, compose(standard, standard))
    accumulate(standard, contract(gap, standard))
    accumulate(gap, extend(gap, standard, ExtendMode.AFTER_B))
    accumulate(gap, extend(gap, standard, ExtendMode.BEFORE_A))
    accumulate(gap, substitute(gap, gap))
    accumulate(gap, extend(gap, standard, ExtendMode.INTO_D))
    accumulate(gap, extend(gap, standard, ExtendMode.INTO_C))
    return MatrixPair(gap, standard)


def check_gap_symmetry(gap: BitMatrix, n: int) -> None:
    """Raise GapSymmetryError unless the gap matrix satisfies all symmetric-gap identities."""
    identities: dict[str, Callable[[], BitMatrix]] = {
        "row pair swap": lambda: swap_row_pairs(gap, n),
        "column pair swap": lambda: swap_column_pairs(gap, n),
        "row/column exchange": gap.transpose,
    }
    for name, image in identities.items():
        if image() != gap:
            raise GapSymmetryError(f"gap matrix is not invariant under {name}", "GAP_NOT_SYMMETRIC")


def check_standard_symmetry(standard: BoolMatrix) -> None:
    if not np.array_equal(standard, standard.T):
        raise GapSymmetryError("standard matrix differs from its transpose", "STANDARD_NOT_SYMMETRIC")


def symmetric_square_step(pair: MatrixPair) -> MatrixPair:
    """Compose, contract, extend after b and substitute, then close under the symmetric-gap identities.

    Raises:
        GapSymmetryError: the incoming gap or standard matrix is not symmetric
    """
    n = pair.n
    check_standard_symmetry(pair.standard)
    check_gap_symmetry(pair.gap, n)
    gap = pair.gap.copy()
    standard = pair.standard.copy()
    accumulate(standard, compose(standard, standard))
    accumulate(standard, contract(gap, standard))
    accumulate(gap, extend(gap, standard, ExtendMode.AFTER_B))
    accumulate(gap, substitute(gap, gap))
    gap = symmetrize_gap(gap, n)
    standard |= standard.T
    return MatrixPair(gap, standard)


_STEPS: dict[ClosureMethod, Callable[[MatrixPair], MatrixPair]] = {
    ClosureMethod.SQUARE: square_step,
    ClosureMethod.SIMPLE: simple_square_step,
    ClosureMethod.SYMMETRIC: symmetric_square_step,
}


# =============================================================================
# Fixpoint
# =============================================================================


def transitive_closure(
    instance: Instance,
    method: ClosureMethod = ClosureMethod.SIMPLE,
    max_iters: int | None = None,
    on_iteration: IterationCallback | None = None,
) -> ClosureResult:
    """Square until the pair stops changing.

    ``iterations`` counts every squaring applied, including the one that
    confirms the fixpoint.

    Raises:
        MethodNotApplicableError: symmetric method on a variant without gap symmetry
        IterationBudgetExceeded: no fixpoint after max_iters squarings
    """
    if method is ClosureMethod.SYMMETRIC and not instance.variant.gap_symmetric:
        raise MethodNotApplicableError(
            f"method 'symmetric' needs a gap-symmetric variant, got {instance.variant.value}",
            "METHOD_NOT_APPLICABLE",
        )
    budget = max_iters if max_iters is not None else default_max_iters(instance.n)
    step = _STEPS[method]

    current = MatrixPair(instance.gap.copy(), instance.standard.copy())
    for iteration in range(1, budget + 1):
        started = time.perf_counter()
        following = step(current)
        elapsed = time.perf_counter() - started
        logger.debug(
            "%s iteration %d: |E|=%d |gap|=%d (%.3fs)",
            method.value,
            iteration,
            popcount(following.standard),
            popcount(following.gap),
            elapsed,
        )
        if on_iteration is not None:
            on_iteration(iteration, following, elapsed)
        if following.same_as(current):
            logger.info("%s closure reached fixpoint after %d iterations", method.value, iteration)
            return ClosureResult(
                standard=_frozen(following.standard),
                gap=following.gap.freeze(),
                iterations=iteration,
                method=method,
            )
        current = following

    raise IterationBudgetExceeded(
        f"no fixpoint after {budget} {method.value} iterations (n={instance.n})", "ITERATION_BUDGET"
    )


def _frozen(matrix: BoolMatrix) -> BoolMatrix:
    matrix.setflags(write=False)
    return matrix


# =============================================================================
# Queries
# =============================================================================


def query(result: ClosureResult, s: int, t: int) -> bool:
    """Is there a realizable path from s to t?"""
    check_vertex(result.n, s, t)
    return bool(result.standard[s, t])


def query_gap(result: ClosureResult, a: int, c: int, d: int, b: int) -> bool:
    """Is (a,(c,d),b) realizable with a gap?"""
    check_vertex(result.n, a, c, d, b)
    row, col = GapIndex(result.n).position(a, c, d, b)
    return bool(result.gap[row, col])


def dump(result: ClosureResult) -> str:
    return dump_closure(result.standard, result.gap)
