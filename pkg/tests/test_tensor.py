"""Tests for the boolean tensor products."""

from __future__ import annotations

import numpy as np
import pytest

from realizability import bits
from realizability.bits import BitMatrix
from realizability.core import GapIndex, as_tensor
from realizability.exceptions import DimensionMismatchError
from realizability.models import BoolMatrix
from realizability.tensor import ExtendMode, accumulate, compose, contract, extend, substitute


def _gap(n: int, *tuples: tuple[int, int, int, int]) -> BitMatrix:
    """Gap matrix with the given (a, c, d, b) entries set."""
    gap = BitMatrix.zeros(n * n, n * n)
    index = GapIndex(n)
    for entry in tuples:
        gap.set_bit(*index.position(*entry))
    return gap


def _edges(n: int, *pairs: tuple[int, int]) -> BoolMatrix:
    matrix = np.zeros((n, n), dtype=np.bool_)
    for u, v in pairs:
        matrix[u, v] = True
    return matrix


def _set_tuples(gap: BitMatrix, n: int) -> set[tuple[int, int, int, int]]:
    """Set entries as (a, c, d, b)."""
    return {(int(a), int(c), int(d), int(b)) for a, b, c, d in np.argwhere(as_tensor(gap, n))}


def _random_gap(n: int, density: float, seed: int) -> tuple[BitMatrix, BoolMatrix]:
    dense = np.random.default_rng(seed).random((n * n, n * n)) < density
    return BitMatrix.from_bool(dense), dense


def _dense_extend(gap: BoolMatrix, edges: BoolMatrix, mode: ExtendMode) -> BoolMatrix:
    n = edges.shape[0]
    y = gap.reshape(n, n, n, n).astype(np.int64)  # [a, b, c, d]
    e = edges.astype(np.int64)
    subscripts = {
        ExtendMode.AFTER_B: "abcd,bz->azcd",
        ExtendMode.BEFORE_A: "za,abcd->zbcd",
        ExtendMode.INTO_D: "abcd,zd->abcz",
        ExtendMode.INTO_C: "abcd,cz->abzd",
    }[mode]
    operands = (e, y) if mode is ExtendMode.BEFORE_A else (y, e)
    result: BoolMatrix = (np.einsum(subscripts, *operands) > 0).reshape(n * n, n * n)
    return result


class TestCompose:
    def test_path(self) -> None:
        left = _edges(3, (0, 1))
        right = _edges(3, (1, 2))
        assert np.argwhere(compose(left, right)).tolist() == [[0, 2]]

    def test_matches_integer_product(self) -> None:
        rng = np.random.default_rng(11)
        left = rng.random((7, 7)) < 0.3
        right = rng.random((7, 7)) < 0.3
        expected = (left.astype(int) @ right.astype(int)) > 0
        assert np.array_equal(compose(left, right), expected)

    def test_shape_mismatch(self) -> None:
        with pytest.raises(DimensionMismatchError):
            compose(np.zeros((2, 2), dtype=np.bool_), np.zeros((3, 3), dtype=np.bool_))


class TestContract:
    def test_gap_filled_by_edge(self) -> None:
        gap = _gap(3, (0, 1, 2, 2))
        out = contract(gap, _edges(3, (1, 2)))
        assert np.argwhere(out).tolist() == [[0, 2]]

    def test_unmatched_edge(self) -> None:
        gap = _gap(3, (0, 1, 2, 2))
        assert not contract(gap, _edges(3, (2, 1))).any()

    @pytest.mark.parametrize("n", [3, 5, 9])
    def test_matches_dense_sum(self, n: int) -> None:
        gap, dense = _random_gap(n, 0.05, n)
        edges = np.random.default_rng(n + 1).random((n, n)) < 0.3
        expected = (dense.astype(np.int64) @ edges.reshape(n * n).astype(np.int64) > 0).reshape(n, n)
        assert np.array_equal(contract(gap, edges), expected)

    def test_gap_size_checked(self) -> None:
        with pytest.raises(DimensionMismatchError):
            contract(BitMatrix.zeros(4, 4), np.zeros((3, 3), dtype=np.bool_))

    def test_standard_must_be_square(self) -> None:
        with pytest.raises(DimensionMismatchError):
            contract(BitMatrix.zeros(4, 4), np.zeros((2, 3), dtype=np.bool_))


class TestExtend:
    @pytest.mark.parametrize(
        ("mode", "entry", "edge", "expected"),
        [
            (ExtendMode.AFTER_B, (0, 1, 1, 1), (1, 2), (0, 1, 1, 2)),
            (ExtendMode.BEFORE_A, (0, 1, 1, 1), (2, 0), (2, 1, 1, 1)),
            (ExtendMode.INTO_D, (0, 1, 1, 2), (0, 1), (0, 1, 0, 2)),
            (ExtendMode.INTO_C, (0, 1, 1, 2), (1, 2), (0, 2, 1, 2)),
        ],
        ids=[mode.value for mode in ExtendMode],
    )
    def test_single_bit(
        self,
        mode: ExtendMode,
        entry: tuple[int, int, int, int],
        edge: tuple[int, int],
        expected: tuple[int, int, int, int],
    ) -> None:
        out = extend(_gap(3, entry), _edges(3, edge), mode)
        assert _set_tuples(out, 3) == {expected}

    @pytest.mark.parametrize("mode", list(ExtendMode), ids=[mode.value for mode in ExtendMode])
    def test_identity_is_neutral(self, mode: ExtendMode) -> None:
        gap, _ = _random_gap(4, 0.2, 3)
        assert extend(gap, np.eye(4, dtype=np.bool_), mode) == gap

    @pytest.mark.parametrize("mode", list(ExtendMode), ids=[mode.value for mode in ExtendMode])
    @pytest.mark.parametrize("n", [3, 5])
    def test_matches_index_sum(self, mode: ExtendMode, n: int) -> None:
        gap, dense = _random_gap(n, 0.05, 7 * n)
        edges = np.random.default_rng(n).random((n, n)) < 0.3
        assert extend(gap, edges, mode) == BitMatrix.from_bool(_dense_extend(dense, edges, mode))

    @pytest.mark.parametrize("mode", list(ExtendMode), ids=[mode.value for mode in ExtendMode])
    def test_empty_edges_clear(self, mode: ExtendMode) -> None:
        gap = _gap(2, (0, 0, 1, 1))
        assert extend(gap, np.zeros((2, 2), dtype=np.bool_), mode).popcount() == 0

    def test_result_is_fresh(self) -> None:
        gap = _gap(2, (0, 0, 1, 1))
        out = extend(gap, np.eye(2, dtype=np.bool_), ExtendMode.AFTER_B)
        out.data[:] = 0
        assert gap.popcount() == 1


class TestSubstitute:
    def test_inner_tuple_fills_gap(self) -> None:
        outer = _gap(4, (0, 1, 2, 3))
        inner = _gap(4, (1, 0, 0, 2))
        assert _set_tuples(substitute(outer, inner), 4) == {(0, 0, 0, 3)}

    def test_inner_must_match_gap_endpoints(self) -> None:
        outer = _gap(4, (0, 1, 2, 3))
        inner = _gap(4, (2, 0, 0, 1))
        assert substitute(outer, inner).popcount() == 0

    @pytest.mark.parametrize("n", [3, 5, 6])
    def test_matches_flat_product(self, n: int) -> None:
        outer, left = _random_gap(n, 0.08, n)
        inner, right = _random_gap(n, 0.08, n + 100)
        expected = (left.astype(np.int64) @ right.astype(np.int64)) > 0
        assert substitute(outer, inner) == BitMatrix.from_bool(expected)

    def test_small_blocks_give_same_product(self, monkeypatch: pytest.MonkeyPatch) -> None:
        outer, left = _random_gap(6, 0.1, 1)
        inner, right = _random_gap(6, 0.1, 2)
        expected = BitMatrix.from_bool((left.astype(np.int64) @ right.astype(np.int64)) > 0)
        monkeypatch.setattr(bits, "BLOCK_ELEMENTS", 64)
        assert substitute(outer, inner) == expected
        for mode in ExtendMode:
            edges = np.random.default_rng(4).random((6, 6)) < 0.3
            assert extend(outer, edges, mode) == BitMatrix.from_bool(_dense_extend(left, edges, mode))

    def test_shape_mismatch(self) -> None:
        with pytest.raises(DimensionMismatchError):
            substitute(BitMatrix.zeros(4, 4), BitMatrix.zeros(9, 9))


class TestAccumulate:
    def test_in_place_or(self) -> None:
        into = _edges(2, (0, 0))
        accumulate(into, _edges(2, (1, 1)))
        assert np.array_equal(into, np.eye(2, dtype=np.bool_))

    def test_in_place_or_packed(self) -> None:
        into = _gap(2, (0, 0, 0, 0))
        accumulate(into, _gap(2, (1, 1, 1, 1)))
        assert _set_tuples(into, 2) == {(0, 0, 0, 0), (1, 1, 1, 1)}

    def test_shape_mismatch(self) -> None:
        with pytest.raises(DimensionMismatchError):
            accumulate(np.zeros((2, 2), dtype=np.bool_), np.zeros((3, 3), dtype=np.bool_))

    def test_mixed_storage_rejected(self) -> None:
        with pytest.raises(DimensionMismatchError):
            accumulate(BitMatrix.zeros(4, 4), np.zeros((4, 4), dtype=np.bool_))
