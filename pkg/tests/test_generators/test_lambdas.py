"""Tests pour la base λ de SU(n)."""

import math

import numpy as np
import pytest

from sun_coherent.errors import DimensionError, IndexRangeError
from sun_coherent.generators import lambda_index, lambda_set, primed_lambda
from sun_coherent.generators.algebra import hermiticity_deviation, trace_orthonormality_deviation
from sun_coherent.models.enums import GeneratorKind, PrimedLambda

PAULI = [
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
]

GELL_MANN = [
    [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
    [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]],
    [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
    [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
    [[0, 0, -1j], [0, 0, 0], [1j, 0, 0]],
    [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[0, 0, 0], [0, 0, -1j], [0, 1j, 0]],
    np.diag([1, 1, -2]) / math.sqrt(3),
]

SU4_LABELS = [
    "Theta^1_2", "beta^1_2", "eta^1_1",
    "Theta^1_3", "beta^1_3", "Theta^2_3", "beta^2_3", "eta^2_2",
    "Theta^1_4", "beta^1_4", "Theta^2_4", "beta^2_4", "Theta^3_4", "beta^3_4", "eta^3_3",
]  # fmt: skip


class TestLambdaSet:
    """Construction et ordre par blocs."""

    def test_pauli_recovery(self) -> None:
        gens = lambda_set(2)
        for matrix, expected in zip(gens.matrices, PAULI, strict=True):
            np.testing.assert_allclose(matrix, expected, atol=1e-15)

    def test_gell_mann_recovery(self) -> None:
        gens = lambda_set(3)
        for matrix, expected in zip(gens.matrices, GELL_MANN, strict=True):
            np.testing.assert_allclose(matrix, expected, atol=1e-15)

    def test_lambda8(self) -> None:
        expected = np.diag([1, 1, -2]) / math.sqrt(3)
        np.testing.assert_allclose(lambda_set(3).lam(8), expected, atol=1e-15)

    def test_su4_labels(self) -> None:
        gens = lambda_set(4)
        assert len(gens) == 15
        assert [str(label) for label in gens.labels] == SU4_LABELS

    @pytest.mark.parametrize("n", range(2, 8))
    def test_count(self, n: int) -> None:
        assert len(lambda_set(n)) == n * n - 1

    @pytest.mark.parametrize("n", range(2, 7))
    def test_hermitian_traceless(self, n: int) -> None:
        assert hermiticity_deviation(lambda_set(n)) < 1e-12

    @pytest.mark.parametrize("n", range(2, 7))
    def test_trace_orthonormality(self, n: int) -> None:
        assert trace_orthonormality_deviation(lambda_set(n)) < 1e-12

    @pytest.mark.parametrize("n", [0, 1])
    def test_too_small(self, n: int) -> None:
        with pytest.raises(DimensionError, match="n ≥ 2"):
            lambda_set(n)

    def test_matrices_read_only(self) -> None:
        with pytest.raises(ValueError):
            lambda_set(3).matrices[0][0, 0] = 5.0

    def test_by_label(self) -> None:
        gens = lambda_set(3)
        np.testing.assert_array_equal(gens.by_label("beta^2_3"), gens.lam(7))

    def test_unknown_label(self) -> None:
        with pytest.raises(KeyError, match="inconnue"):
            lambda_set(3).by_label("Theta^3_4")

    @pytest.mark.parametrize("index", [0, 9])
    def test_lam_out_of_range(self, index: int) -> None:
        with pytest.raises(IndexRangeError):
            lambda_set(3).lam(index)


class TestLambdaIndex:
    """Position 1-basée d'un générateur dans la numérotation."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_set_order(self, n: int) -> None:
        gens = lambda_set(n)
        for position, label in enumerate(gens.labels, start=1):
            assert lambda_index(label.kind, label.upper, label.lower) == position

    def test_known_positions(self) -> None:
        assert lambda_index(GeneratorKind.BETA, 3, 4) == 14
        assert lambda_index(GeneratorKind.ETA, 3, 3) == 15
        assert lambda_index(GeneratorKind.BETA, 2, 3) == 7


class TestPrimedLambda:
    """Combinaisons diagonales primées."""

    @pytest.mark.parametrize(
        ("n", "which", "diagonal"),
        [
            (3, PrimedLambda.LAMBDA8, [0, 1, -1]),
            (4, PrimedLambda.LAMBDA8, [0, 1, -1, 0]),
            (4, PrimedLambda.LAMBDA15, [0, 0, 1, -1]),
            (5, PrimedLambda.LAMBDA15, [0, 0, 1, -1, 0]),
        ],
    )
    def test_values(self, n: int, which: PrimedLambda, diagonal: list[int]) -> None:
        np.testing.assert_allclose(primed_lambda(n, which), np.diag(diagonal), atol=1e-15)

    @pytest.mark.parametrize(
        ("n", "which"), [(2, PrimedLambda.LAMBDA8), (3, PrimedLambda.LAMBDA15)]
    )
    def test_too_small(self, n: int, which: PrimedLambda) -> None:
        with pytest.raises(DimensionError):
            primed_lambda(n, which)
