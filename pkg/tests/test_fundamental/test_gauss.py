"""Tests pour la décomposition de Gauss de SU(2)."""

import math

import numpy as np
import pytest

from sun_coherent.errors import PoleError
from sun_coherent.fundamental import (
    gauss_decomposition_su2,
    gauss_product,
    gauss_reconstruction_deviation,
    su2_matrix,
)


class TestGaussDecomposition:
    """Coordonnées (ζ, ν)."""

    def test_quarter_angle(self) -> None:
        params = gauss_decomposition_su2(math.pi / 4, 0.0, 0.0)
        assert params.zeta == pytest.approx(1.0)
        assert params.nu == pytest.approx(math.log(1 / math.sqrt(2)))

    def test_with_phase(self) -> None:
        params = gauss_decomposition_su2(math.pi / 3, 0.0, math.pi / 2)
        assert params.zeta == pytest.approx(1j * math.sqrt(3))
        assert params.nu == pytest.approx(math.log(0.5))

    def test_identity(self) -> None:
        params = gauss_decomposition_su2(0.0, 0.0, 0.0)
        assert params.zeta == 0
        assert params.nu == 0.0

    def test_pole(self) -> None:
        with pytest.raises(PoleError, match="π/2"):
            gauss_decomposition_su2(math.pi / 2, 0.3, 0.1)


class TestGaussProduct:
    """Reconstruction de g(θ, φ₁, φ₂)."""

    @pytest.mark.parametrize(
        ("theta", "phi1", "phi2"),
        [(0.0, 0.0, 0.0), (0.3, 1.1, 2.0), (1.2, 5.0, 0.4), (1.5, 3.0, 3.0)],
    )
    def test_reconstruction(self, theta: float, phi1: float, phi2: float) -> None:
        assert gauss_reconstruction_deviation(theta, phi1, phi2) < 1e-12

    def test_product_matches_matrix(self) -> None:
        params = gauss_decomposition_su2(0.7, 0.2, 1.4)
        np.testing.assert_allclose(
            gauss_product(params, 0.2), su2_matrix(0.7, 0.2, 1.4), atol=1e-12
        )
