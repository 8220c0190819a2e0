"""
Boolean tensor products
=======================

The seven products that combine standard matrices (n x n boolean arrays)
and packed gap matrices (n^2 x n^2 ``BitMatrix``). Every product returns a
fresh matrix; ``accumulate`` is the only in-place operation.

Products that move whole gap rows (contract, extend after b / before a) OR
packed 64-bit words. The others unpack bounded blocks and run float32 BLAS
contractions thresholded at zero; contraction lengths are at most
n^2 <= 2^24, so the float32 counts are exact.
"""

from __future__ import annotations

import enum

import numpy as np
import numpy.typing as npt

from realizability.bits import BitMatrix, block_rows, row_blocks
from realizability.exceptions import DimensionMismatchError
from realizability.models import BoolMatrix

FloatArray = npt.NDArray[np.float32]


class ExtendMode(str, enum.Enum):
    """Which coordinate of Gap[a,(c,d),b] a standard matrix extends.

    AFTER_B: out[a,(c,d),z] = OR_b Gap[a,(c,d),b] E[b,z]
    BEFORE_A: out[z,(c,d),b] = OR_a E[z,a] Gap[a,(c,d),b]
    INTO_D: out[a,(c,z),b] = OR_d Gap[a,(c,d),b] E[z,d]
    INTO_C: out[a,(z,d),b] = OR_c Gap[a,(c,d),b] E[c,z]
    """

    AFTER_B = "after-b"
    BEFORE_A = "before-a"
    INTO_D = "into-d"
    INTO_C = "into-c"


def _as_float(matrix: BoolMatrix) -> FloatArray:
    return matrix.astype(np.float32)


def _standard_size(matrix: BoolMatrix, what: str) -> int:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(f"{what} must be square, got shape {matrix.shape}")
    return int(matrix.shape[0])


def _gap_size(gap: BitMatrix, n: int) -> None:
    if gap.shape != (n * n, n * n):
        raise DimensionMismatchError(f"gap matrix shape {gap.shape} does not match n={n}")


def compose(left: BoolMatrix, right: BoolMatrix) -> BoolMatrix:
    """Boolean product of two standard matrices."""
    n = _standard_size(left, "left operand")
    if right.shape != (n, n):
        raise DimensionMismatchError(f"cannot compose {left.shape} with {right.shape}")
    result: BoolMatrix = (_as_float(left) @ _as_float(right)) > 0
    return result


def contract(gap: BitMatrix, standard: BoolMatrix) -> BoolMatrix:
    """out[a,b] = OR_{c,d} Gap[a,(c,d),b] E[c,d]."""
    n = _standard_size(standard, "standard matrix")
    _gap_size(gap, n)
    mask = BitMatrix.from_bool(standard.reshape(1, n * n)).words[0]
    hit = np.zeros(n * n, dtype=np.bool_)
    for start, stop in row_blocks(n * n, block_rows(gap.data.shape[1])):
        hit[start:stop] = (gap.words[start:stop] & mask).any(axis=1)
    return hit.reshape(n, n)


def _move_rows(gap: BitMatrix, standard: BoolMatrix, mode: ExtendMode) -> BitMatrix:
    n = standard.shape[0]
    src = gap.words
    out = BitMatrix.zeros(n * n, n * n)
    dst = out.words
    if mode is ExtendMode.AFTER_B:
        # rows (a,b) feed rows (a,z) for every a
        for b, z in np.argwhere(standard):
            dst[z::n] |= src[b::n]
    else:
        # rows (a,b) feed rows (z,b) for every b
        for z, a in np.argwhere(standard):
            dst[z * n : (z + 1) * n] |= src[a * n : (a + 1) * n]
    return out


def _move_columns(gap: BitMatrix, standard: BoolMatrix, mode: ExtendMode) -> BitMatrix:
    n = standard.shape[0]
    edges = _as_float(standard)
    out = BitMatrix.zeros(n * n, n * n)
    live = gap.live_rows()
    for start, stop in row_blocks(n * n, block_rows(n * n)):
        if not live[start:stop].any():
            continue
        block = gap.unpack_rows(start, stop).astype(np.float32).reshape(-1, n, n)  # [r, c, d]
        if mode is ExtendMode.INTO_D:
            moved = block @ edges.T  # [r, c, z]
        else:
            moved = edges.T @ block  # [r, z, d]
        out.store_rows(start, (moved > 0).reshape(-1, n * n))
    return out


def extend(gap: BitMatrix, standard: BoolMatrix, mode: ExtendMode) -> BitMatrix:
    """Move one coordinate of the gap tuple along E."""
    n = _standard_size(standard, "standard matrix")
    _gap_size(gap, n)
    if mode in (ExtendMode.AFTER_B, ExtendMode.BEFORE_A):
        return _move_rows(gap, standard, mode)
    return _move_columns(gap, standard, mode)


def substitute(outer: BitMatrix, inner: BitMatrix) -> BitMatrix:
    """Fill the gap of ``outer`` with a gap tuple of ``inner``.

    out[a,(e,f),b] = OR_{c,d} outer[a,(c,d),b] inner[c,(e,f),d], which is the
    plain boolean product of the flat matrices. Only rows of ``inner`` with a
    set bit take part in the contraction.
    """
    if outer.rows != outer.cols or outer.shape != inner.shape:
        raise DimensionMismatchError(f"cannot substitute {inner.shape} into {outer.shape}")
    size = outer.rows
    out = BitMatrix.zeros(size, size)
    through = np.flatnonzero(inner.live_rows())
    sources = np.flatnonzero(outer.live_rows())
    if through.size == 0 or sources.size == 0:
        return out

    width = block_rows(through.size)
    height = block_rows(size)
    for col_start, col_stop in row_blocks(size, width):
        right = inner.unpack_columns(col_start, col_stop)[through].astype(np.float32)
        if not right.any():
            continue
        for lo, hi in row_blocks(sources.size, height):
            rows = sources[lo:hi]
            left = np.unpackbits(outer.data[rows], axis=1, count=size, bitorder="little")[:, through]
            out.store_block(rows, col_start, (left.astype(np.float32) @ right) > 0)
    return out


def accumulate(into: BoolMatrix | BitMatrix, update: BoolMatrix | BitMatrix) -> None:
    """OR ``update`` into ``into`` in place."""
    if into.shape != update.shape:
        raise DimensionMismatchError(f"cannot accumulate {update.shape} into {into.shape}")
    if isinstance(into, BitMatrix) and isinstance(update, BitMatrix):
        into |= update
    elif isinstance(into, np.ndarray) and isinstance(update, np.ndarray):
        np.logical_or(into, update, out=into)
    else:
        raise DimensionMismatchError("cannot mix packed and unpacked matrices")
