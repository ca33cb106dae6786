"""Tests pour les opérateurs d'échelle et de Cartan."""

import math

import numpy as np
import pytest

from sun_coherent.errors import DimensionError, IndexRangeError
from sun_coherent.symrep import (
    SparseOperator,
    basis,
    cartan_op,
    ladder_op,
    lift_generator,
    lowering_op,
    number_op,
    raising_op,
)


def _unit(n: int, N: int, state: tuple[int, ...]) -> np.ndarray:
    occ = basis(n, N)
    vector = np.zeros(len(occ), dtype=complex)
    vector[occ.index(state)] = 1.0
    return vector


def _apply_to(op: SparseOperator, n: int, N: int, state: tuple[int, ...]) -> np.ndarray:
    return op.apply(_unit(n, N, state))


class TestRaising:
    """J^h_j pour h < j."""

    def test_su2(self) -> None:
        result = _apply_to(raising_op(2, 2, 1, 2), 2, 2, (1, 1))
        np.testing.assert_allclose(result, math.sqrt(2) * _unit(2, 2, (2, 0)), atol=1e-15)

    def test_su3(self) -> None:
        result = _apply_to(raising_op(3, 2, 2, 3), 3, 2, (0, 1, 1))
        np.testing.assert_allclose(result, math.sqrt(2) * _unit(3, 2, (0, 2, 0)), atol=1e-15)

    def test_highest_weight_annihilated(self) -> None:
        for h, j in [(1, 2), (1, 3), (2, 3)]:
            result = _apply_to(raising_op(3, 3, h, j), 3, 3, (3, 0, 0))
            np.testing.assert_allclose(result, 0.0, atol=1e-15)

    def test_wrong_order(self) -> None:
        with pytest.raises(IndexRangeError, match="h < j"):
            raising_op(3, 2, 2, 1)


class TestLowering:
    """J^h_j pour h > j."""

    def test_su2(self) -> None:
        result = _apply_to(lowering_op(2, 2, 2, 1), 2, 2, (1, 1))
        np.testing.assert_allclose(result, math.sqrt(2) * _unit(2, 2, (0, 2)), atol=1e-15)

    def test_lowest_weight_annihilated(self) -> None:
        result = _apply_to(lowering_op(2, 2, 2, 1), 2, 2, (0, 2))
        np.testing.assert_allclose(result, 0.0, atol=1e-15)

    @pytest.mark.parametrize(("h", "j"), [(2, 1), (3, 1), (3, 2), (4, 2)])
    def test_adjoint_of_raising(self, h: int, j: int) -> None:
        lowering = lowering_op(4, 3, h, j)
        raising = raising_op(4, 3, j, h)
        assert lowering.max_abs_difference(raising.adjoint()) < 1e-15

    def test_wrong_order(self) -> None:
        with pytest.raises(IndexRangeError, match="h > j"):
            lowering_op(3, 2, 1, 2)


class TestCartan:
    """J^h_h diagonaux."""

    @pytest.mark.parametrize(
        ("n", "N", "h", "state", "expected"),
        [
            (2, 2, 1, (1, 1), 0.0),
            (2, 2, 1, (2, 0), 2.0),
            (3, 2, 1, (1, 1, 0), 0.0),
            (3, 2, 2, (1, 1, 0), 2 / math.sqrt(3)),
            (3, 2, 2, (2, 0, 0), 2 / math.sqrt(3)),
            (3, 2, 2, (0, 0, 2), -4 / math.sqrt(3)),
        ],
    )
    def test_eigenvalues(
        self, n: int, N: int, h: int, state: tuple[int, ...], expected: float
    ) -> None:
        result = _apply_to(cartan_op(n, N, h), n, N, state)
        np.testing.assert_allclose(result, expected * _unit(n, N, state), atol=1e-14)

    @pytest.mark.parametrize("h", [0, 3])
    def test_out_of_range(self, h: int) -> None:
        with pytest.raises(IndexRangeError):
            cartan_op(3, 1, h)


class TestLift:
    """Relèvement de seconde quantification."""

    @pytest.mark.parametrize(("n", "N"), [(2, 3), (3, 2), (4, 1)])
    def test_number_operator(self, n: int, N: int) -> None:
        dense = number_op(n, N).to_dense()
        np.testing.assert_allclose(dense, N * np.eye(len(basis(n, N))), atol=1e-15)

    def test_fundamental_is_identity_map(self, rng: np.random.Generator) -> None:
        g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        np.testing.assert_allclose(lift_generator(3, 1, g).to_dense(), g, atol=1e-15)

    def test_linear(self, rng: np.random.Generator) -> None:
        a = rng.standard_normal((3, 3))
        b = rng.standard_normal((3, 3))
        combined = lift_generator(3, 2, a + 2.0 * b)
        expected = lift_generator(3, 2, a).plus(lift_generator(3, 2, b).scaled(2.0))
        assert combined.max_abs_difference(expected) < 1e-13

    def test_commutation_relations(self) -> None:
        n, N = 3, 2
        indices = range(1, n + 1)
        ops = {(h, j): ladder_op(n, N, h, j) for h in indices for j in indices}
        for (h, j), left in ops.items():
            for (k, m), right in ops.items():
                expected = ops[(h, m)].scaled(float(j == k)).plus(
                    ops[(k, j)].scaled(-float(m == h))
                )
                assert left.commutator(right).max_abs_difference(expected) < 1e-13

    def test_wrong_shape(self) -> None:
        with pytest.raises(DimensionError):
            lift_generator(3, 2, np.eye(2))

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DimensionError, match="incompatibles"):
            number_op(2, 1).plus(number_op(2, 2))

    def test_ladder_index(self) -> None:
        with pytest.raises(IndexRangeError):
            ladder_op(3, 1, 4, 1)
