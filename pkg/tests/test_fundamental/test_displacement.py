"""Tests pour le déplacement en exponentielles de matrices λ."""

from collections.abc import Callable

import numpy as np
import pytest

from sun_coherent.fundamental import (
    coherent_state_fund,
    displacement_factors,
    displacement_lambda,
    embed_block,
    middle_matrix,
    su2_matrix,
)
from sun_coherent.models.angles import AngleCoordinates, DisplacementParameters

SU3_PARAMS = DisplacementParameters(n=3, alpha=0.4, beta=-0.9, gamma=1.7, theta=0.6, phi=2.2)
SU4_PARAMS = DisplacementParameters(
    n=4, alpha=0.3, beta=-0.5, gamma=2.1, theta=1.1, phi=0.8, xi1=0.7, phi1=4.0
)


class TestDisplacementFactors:
    """Liste ordonnée des facteurs."""

    def test_su3_labels(self) -> None:
        labels = [factor.label for factor in displacement_factors(SU3_PARAMS)]
        assert labels == ["lambda8'", "lambda7", "lambda8'", "lambda3", "lambda2", "lambda3"]

    def test_su3_expanded_count(self) -> None:
        assert len(displacement_factors(SU3_PARAMS, expanded=True)) == 8

    def test_su4_labels(self) -> None:
        labels = [factor.label for factor in displacement_factors(SU4_PARAMS)]
        assert labels[:3] == ["lambda15'", "lambda14", "lambda15'"]
        assert labels[4] == "lambda7"
        assert len(labels) == 9

    def test_parameters(self) -> None:
        factors = displacement_factors(SU3_PARAMS)
        assert factors[1].parameter == pytest.approx(-0.9)
        assert factors[4].parameter == pytest.approx(-0.6)
        assert factors[3].parameter == pytest.approx(1.1)


class TestDisplacementLambda:
    """Produit des exponentielles hermitiennes."""

    @pytest.mark.parametrize("params", [SU3_PARAMS, SU4_PARAMS])
    def test_first_column_is_coherent_state(self, params: DisplacementParameters) -> None:
        matrix = displacement_lambda(params)
        expected = coherent_state_fund(params.to_angles()).amplitudes
        np.testing.assert_allclose(matrix[:, 0], expected, atol=1e-12)

    @pytest.mark.parametrize("params", [SU3_PARAMS, SU4_PARAMS])
    def test_expanded_form_agrees(self, params: DisplacementParameters) -> None:
        np.testing.assert_allclose(
            displacement_lambda(params, expanded=True), displacement_lambda(params), atol=1e-12
        )

    def test_su3_factorization(self) -> None:
        p = SU3_PARAMS
        left = embed_block(su2_matrix(-p.beta, p.alpha + p.gamma, p.gamma - p.alpha), 3, 1)
        expected = left @ middle_matrix(3, p.theta, p.phi)
        np.testing.assert_allclose(displacement_lambda(p), expected, atol=1e-12)

    @pytest.mark.parametrize("n", [3, 4])
    def test_special_unitary(
        self, n: int, angle_factory: Callable[..., AngleCoordinates]
    ) -> None:
        params = DisplacementParameters.from_angles(angle_factory(n))
        matrix = displacement_lambda(params)
        np.testing.assert_allclose(matrix.conj().T @ matrix, np.eye(n), atol=1e-12)
        assert abs(np.linalg.det(matrix) - 1.0) < 1e-12
