"""
Packed bit matrices
===================

``BitMatrix`` keeps one bit per entry, rows packed little-endian into
64-bit words. An n^2 x n^2 gap matrix at n=128 takes 32 MiB.

Whole-row work (OR, equality, row moves) runs directly on the words.
Anything that needs individual columns unpacks a bounded block of rows at
a time, so no temporary grows past ``BLOCK_ELEMENTS`` entries.
"""

from __future__ import annotations

from collections.abc import Iterator
from typing import Any

import numpy as np
import numpy.typing as npt

from realizability.exceptions import DimensionMismatchError
from realizability.models import BoolMatrix

ByteArray = npt.NDArray[np.uint8]
WordArray = npt.NDArray[np.uint64]
IndexArray = npt.NDArray[np.intp]

WORD_BITS = 64
BLOCK_ELEMENTS = 1 << 24

_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def block_rows(width: int, budget: int | None = None) -> int:
    """Rows per block so that ``rows * width <= budget``; always a positive multiple of 8."""
    rows = (BLOCK_ELEMENTS if budget is None else budget) // max(width, 1)
    return max(8, rows - rows % 8)


def row_blocks(total: int, step: int) -> Iterator[tuple[int, int]]:
    for start in range(0, total, step):
        yield start, min(start + step, total)


class BitMatrix:
    """Boolean matrix with packed rows.

    ``data`` is a (rows, 8 * words_per_row) uint8 array; ``words`` views the
    same memory as uint64. Padding bits past ``cols`` are always zero.
    """

    __slots__ = ("cols", "data")

    def __init__(self, data: ByteArray, cols: int) -> None:
        if data.ndim != 2 or data.dtype != np.uint8 or data.shape[1] % 8:
            raise DimensionMismatchError(f"packed rows need a 2-D uint8 array of 8-byte words, got {data.shape}")
        if data.shape[1] * 8 < cols:
            raise DimensionMismatchError(f"{data.shape[1]} bytes per row cannot hold {cols} columns")
        self.data = data
        self.cols = cols

    # -- construction ---------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        words = -(-cols // WORD_BITS)
        return cls(np.zeros((rows, words * 8), dtype=np.uint8), cols)

    @classmethod
    def from_bool(cls, matrix: BoolMatrix) -> BitMatrix:
        if matrix.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-D boolean matrix, got shape {matrix.shape}")
        packed = cls.zeros(*matrix.shape)
        for start, stop in row_blocks(matrix.shape[0], block_rows(matrix.shape[1])):
            packed.store_rows(start, matrix[start:stop])
        return packed

    @classmethod
    def identity(cls, size: int) -> BitMatrix:
        packed = cls.zeros(size, size)
        packed.set_diagonal()
        return packed

    # -- shape and access -----------------------------------------------------

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def words(self) -> WordArray:
        return self.data.view(np.uint64)

    def __getitem__(self, index: tuple[int, int]) -> bool:
        row, col = index
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise IndexError(f"entry ({row},{col}) outside {self.shape}")
        return bool((self.data[row, col >> 3] >> (col & 7)) & 1)

    def set_bit(self, row: int, col: int) -> None:
        self.data[row, col >> 3] |= np.uint8(1 << (col & 7))

    def set_diagonal(self) -> None:
        """Set every (i, i)."""
        idx = np.arange(min(self.rows, self.cols))
        self.data[idx, idx >> 3] |= (1 << (idx & 7)).astype(np.uint8)

    def unpack_rows(self, start: int = 0, stop: int | None = None) -> BoolMatrix:
        block = np.unpackbits(self.data[start:stop], axis=1, count=self.cols, bitorder="little")
        return block.view(np.bool_)

    def unpack_columns(self, start: int, stop: int) -> BoolMatrix:
        """Columns ``start:stop`` of every row; ``start`` must be a multiple of 8."""
        if start % 8:
            raise DimensionMismatchError(f"column block must start on a byte, got {start}")
        raw = self.data[:, start // 8 : -(-stop // 8)]
        return np.unpackbits(raw, axis=1, count=stop - start, bitorder="little").view(np.bool_)

    def store_rows(self, start: int, block: BoolMatrix) -> None:
        """Overwrite rows ``start:start+len(block)``."""
        self.store_block(start, 0, block)

    def store_block(self, row: int | IndexArray, col: int, block: BoolMatrix) -> None:
        """Overwrite the columns ``col:col+block.shape[1]`` of the given rows.

        ``col`` must be a multiple of 8 and the block must either end on a
        byte or reach the last column.
        """
        packed = np.packbits(block, axis=1, bitorder="little")
        lo = col // 8
        rows: Any = slice(row, row + block.shape[0]) if isinstance(row, int) else row
        self.data[rows, lo : lo + packed.shape[1]] = packed

    def to_bool(self) -> BoolMatrix:
        return self.unpack_rows()

    # -- whole-matrix operations ----------------------------------------------

    def copy(self) -> BitMatrix:
        return BitMatrix(self.data.copy(), self.cols)

    def freeze(self) -> BitMatrix:
        self.data.setflags(write=False)
        return self

    def _check_same_shape(self, other: BitMatrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot combine {other.shape} with {self.shape}")

    def __ior__(self, other: BitMatrix) -> BitMatrix:
        self._check_same_shape(other)
        np.bitwise_or(self.words, other.words, out=self.words)
        return self

    def __or__(self, other: BitMatrix) -> BitMatrix:
        result = self.copy()
        result |= other
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"BitMatrix(shape={self.shape}, ones={self.popcount()})"

    def covers(self, other: BitMatrix) -> bool:
        """True when every bit of ``other`` is set here."""
        self._check_same_shape(other)
        return not bool(np.any(other.words & ~self.words))

    def popcount(self) -> int:
        return int(_POPCOUNT[self.data].sum(dtype=np.int64))

    def live_rows(self) -> npt.NDArray[np.bool_]:
        """Rows holding at least one bit."""
        result: npt.NDArray[np.bool_] = self.words.any(axis=1)
        return result

    def take_rows(self, order: IndexArray) -> BitMatrix:
        """Row ``i`` of the result is row ``order[i]`` of this matrix."""
        return BitMatrix(self.data[order], self.cols)

    def permute_columns(self, order: IndexArray) -> BitMatrix:
        """Column ``j`` of the result is column ``order[j]`` of this matrix."""
        out = BitMatrix.zeros(self.rows, len(order))
        for start, stop in row_blocks(self.rows, block_rows(self.cols)):
            out.store_rows(start, self.unpack_rows(start, stop)[:, order])
        return out

    def transpose(self) -> BitMatrix:
        out = BitMatrix.zeros(self.cols, self.rows)
        for start, stop in row_blocks(self.rows, block_rows(self.cols)):
            out.store_block(0, start, self.unpack_rows(start, stop).T)
        return out

    def nonzero(self) -> Iterator[tuple[int, int]]:
        """(row, col) of every set bit in row-major order."""
        live = np.flatnonzero(self.live_rows())
        for start, stop in row_blocks(len(live), block_rows(self.cols)):
            chosen = live[start:stop]
            block = np.unpackbits(self.data[chosen], axis=1, count=self.cols, bitorder="little")
            for r, c in zip(*np.nonzero(block), strict=True):
                yield int(chosen[r]), int(c)
