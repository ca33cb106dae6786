"""Tests pour les états cohérents de la représentation symétrique."""

import math
from collections.abc import Callable

import numpy as np
import pytest

from sun_coherent.errors import DimensionError, IndexRangeError, PoleError
from sun_coherent.fundamental import coherent_state_fund, displacement_factors
from sun_coherent.models.angles import AngleCoordinates, DisplacementParameters
from sun_coherent.symrep import (
    angles_to_stereo,
    coherent_state,
    direct_overlap,
    eta_coeff,
    lift_unitary,
    overlap_closed,
    stereo_to_angles,
    stereographic_state,
    tensor_power_oracle,
)

AngleFactory = Callable[..., AngleCoordinates]


class TestEtaCoeff:
    """Coefficients η^N_j."""

    def test_example(self) -> None:
        assert eta_coeff(2, 1, 0.0, 0.0, math.pi / 4) == pytest.approx(math.sqrt(2) / 2)

    def test_phases(self) -> None:
        value = eta_coeff(3, 1, 0.5, 1.2, 0.3)
        expected = (
            np.exp(1j * (1.2 + 2 * 0.5)) * math.sin(0.3) * math.cos(0.3) ** 2 * math.sqrt(3)
        )
        assert value == pytest.approx(expected)

    @pytest.mark.parametrize("j", [-1, 3])
    def test_out_of_range(self, j: int) -> None:
        with pytest.raises(IndexRangeError):
            eta_coeff(2, j, 0.0, 0.0, 0.1)


class TestCoherentState:
    """Développement imbriqué contre l'oracle tensoriel."""

    def test_origin_is_highest_weight(self) -> None:
        state = coherent_state(3, 2, AngleCoordinates.origin(3))
        assert state.amplitude((2, 0, 0)) == pytest.approx(1.0)
        assert state.norm() == pytest.approx(1.0)

    def test_su2_oracle_example(self) -> None:
        angles = AngleCoordinates(xi=[math.pi / 4], phi=[0.0, 0.0])
        oracle = tensor_power_oracle(2, 2, angles)
        np.testing.assert_allclose(oracle.amplitudes, [0.5, math.sqrt(2) / 2, 0.5], atol=1e-15)

    @pytest.mark.parametrize(("n", "N"), [(2, 1), (2, 5), (3, 2), (3, 4), (4, 3), (5, 2)])
    def test_matches_oracle(self, n: int, N: int, angle_factory: AngleFactory) -> None:
        angles = angle_factory(n)
        state = coherent_state(n, N, angles)
        assert state.max_abs_difference(tensor_power_oracle(n, N, angles)) < 1e-12
        assert state.norm() == pytest.approx(1.0, abs=1e-12)

    def test_single_excitation_is_fundamental(self, angle_factory: AngleFactory) -> None:
        angles = angle_factory(4)
        state = coherent_state(4, 1, angles)
        expected = coherent_state_fund(angles).amplitudes
        np.testing.assert_allclose(state.amplitudes, expected, atol=1e-14)

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DimensionError, match="SU\\(2\\)"):
            coherent_state(3, 1, AngleCoordinates.origin(2))


class TestStereographic:
    """Forme stéréographique et carte inverse."""

    @pytest.mark.parametrize(("n", "N"), [(2, 3), (3, 2), (4, 2)])
    def test_matches_expansion(self, n: int, N: int, angle_factory: AngleFactory) -> None:
        angles = angle_factory(n, margin=0.05)
        stereo = stereographic_state(n, N, angles_to_stereo(angles))
        assert stereo.max_abs_difference(coherent_state(n, N, angles)) < 1e-12

    def test_zeta_example(self) -> None:
        stereo = angles_to_stereo(AngleCoordinates(xi=[math.pi / 4], phi=[0.3, 0.3 + math.pi]))
        assert stereo.global_phase == pytest.approx(0.3)
        assert stereo.zeta[0] == pytest.approx(-1.0)

    def test_inverse_map(self, angle_factory: AngleFactory) -> None:
        angles = angle_factory(4, margin=0.05)
        back = stereo_to_angles(angles_to_stereo(angles))
        assert back.xi == pytest.approx(angles.xi)
        np.testing.assert_allclose(
            np.exp(1j * back.phi_array()), np.exp(1j * angles.phi_array()), atol=1e-12
        )

    def test_pole(self) -> None:
        with pytest.raises(PoleError, match="ξ_1"):
            angles_to_stereo(AngleCoordinates(xi=[0.2, math.pi / 2], phi=[0.0, 0.0, 0.0]))

    def test_dimension_mismatch(self) -> None:
        stereo = angles_to_stereo(AngleCoordinates.origin(3))
        with pytest.raises(DimensionError):
            stereographic_state(4, 1, stereo)


class TestOverlap:
    """Recouvrement en forme close."""

    @pytest.mark.parametrize(("n", "N"), [(2, 0), (2, 3), (3, 1), (3, 4), (4, 2), (6, 2)])
    def test_matches_direct(self, n: int, N: int, angle_factory: AngleFactory) -> None:
        a, b = angle_factory(n), angle_factory(n)
        assert overlap_closed(a, b, N) == pytest.approx(direct_overlap(a, b, N), abs=1e-12)

    def test_power_law(self, angle_factory: AngleFactory) -> None:
        a, b = angle_factory(3), angle_factory(3)
        assert overlap_closed(a, b, 5) == pytest.approx(overlap_closed(a, b, 1) ** 5)

    def test_self_overlap(self, angle_factory: AngleFactory) -> None:
        a = angle_factory(4)
        assert overlap_closed(a, a, 3) == pytest.approx(1.0, abs=1e-14)

    def test_bra_is_first_argument(self) -> None:
        a = AngleCoordinates(xi=[0.0], phi=[0.0, 0.0])
        b = AngleCoordinates(xi=[0.0], phi=[0.5, 0.0])
        assert overlap_closed(a, b, 1) == pytest.approx(np.exp(0.5j))

    def test_fundamental_inner_product(self, angle_factory: AngleFactory) -> None:
        a, b = angle_factory(3), angle_factory(3)
        expected = np.vdot(coherent_state_fund(a).amplitudes, coherent_state_fund(b).amplitudes)
        assert overlap_closed(a, b, 1) == pytest.approx(expected)

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DimensionError):
            overlap_closed(AngleCoordinates.origin(2), AngleCoordinates.origin(3), 1)

    def test_negative_N(self) -> None:
        with pytest.raises(DimensionError):
            overlap_closed(AngleCoordinates.origin(2), AngleCoordinates.origin(2), -1)


class TestLiftUnitary:
    """Exponentielles relevées du déplacement SU(3)."""

    @pytest.mark.parametrize("N", [1, 2, 3])
    def test_first_column_is_coherent_state(self, N: int) -> None:
        params = DisplacementParameters(n=3, alpha=0.4, beta=-0.9, gamma=1.7, theta=0.6, phi=2.2)
        factors = [(f.generator, f.parameter) for f in displacement_factors(params)]
        matrix = lift_unitary(3, N, factors)
        expected = coherent_state(3, N, params.to_angles()).amplitudes
        np.testing.assert_allclose(matrix[:, 0], expected, atol=1e-10)
