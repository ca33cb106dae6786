"""États cohérents de la représentation fondamentale.

FR: n_n = (e^{iφ₀}cos ξ₀ ; sin ξ₀ · n_{n-1}) avec n₁ = (e^{iφ_{n-1}}) :
    un point de la sphère S^{2n-1} de ℂⁿ. La forme à phase fixée divise
    par la phase de la première composante.
EN: Unit vectors of ℂⁿ built by the iterative relation; the phase-fixed
    form divides by the phase of the first component.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from sun_coherent.errors import DimensionError
from sun_coherent.models.angles import AngleCoordinates
from sun_coherent.models.enums import AngleConvention

logger = logging.getLogger(__name__)

# En dessous, une amplitude est considérée nulle pour la fixation de phase
ZERO_AMPLITUDE = 1e-12


@dataclass(frozen=True)
class FundamentalState:
    """Vecteur unitaire de ℂⁿ.

    `phase_index` désigne la composante rendue réelle positive par la
    fixation de phase (None si aucune), `pole_fallback` signale que la
    première composante était nulle.
    """

    amplitudes: NDArray[np.complex128]
    phase_index: int | None = None
    pole_fallback: bool = False

    @property
    def n(self) -> int:
        return int(self.amplitudes.shape[0])

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def fundamental_amplitudes(xi: ArrayLike, phi: ArrayLike) -> NDArray[np.complex128]:
    """Version vectorisée : xi de forme (M, n-1), phi de forme (M, n) → (M, n).

    FR: Aucune validation d'intervalle, pour servir aux différences finies
        et aux grilles de quadrature.
    EN: No range validation; used by finite differences and grids.
    """
    xi_arr = np.asarray(xi, dtype=np.float64)
    phi_arr = np.atleast_2d(np.asarray(phi, dtype=np.float64))
    points, n = phi_arr.shape
    xi_arr = xi_arr.reshape(points, n - 1)

    moduli = np.empty((points, n), dtype=np.float64)
    running = np.ones(points, dtype=np.float64)
    for k in range(n - 1):
        moduli[:, k] = running * np.cos(xi_arr[:, k])
        running = running * np.sin(xi_arr[:, k])
    moduli[:, n - 1] = running
    result: NDArray[np.complex128] = moduli * np.exp(1j * phi_arr)
    return result


def coherent_state_fund(angles: AngleCoordinates) -> FundamentalState:
    """État cohérent |n_n⟩ de la représentation fondamentale."""
    amplitudes = fundamental_amplitudes(angles.xi_array(), angles.phi_array())[0]
    return FundamentalState(amplitudes=amplitudes)


def phase_fixed_state(angles: AngleCoordinates) -> FundamentalState:
    """État cohérent divisé par la phase de sa première composante non nulle.

    FR: Convention e^{iφ₀} = 1. Si ξ₀ = π/2 la première composante est
        nulle : la phase de la première composante non nulle est fixée à la
        place et `pole_fallback` est levé.
    EN: e^{iφ₀} = 1 convention; falls back to the first nonzero component
        at the pole and flags it.
    """
    amplitudes = coherent_state_fund(angles).amplitudes
    nonzero = np.flatnonzero(np.abs(amplitudes) > ZERO_AMPLITUDE)
    index = int(nonzero[0])
    fallback = index != 0
    if fallback:
        logger.warning(
            "Première amplitude nulle (ξ₀ = π/2) : phase fixée sur la composante %d",
            index,
        )
    reference = amplitudes[index]
    fixed = amplitudes * (abs(reference) / reference)
    fixed[index] = abs(reference)
    return FundamentalState(amplitudes=fixed, phase_index=index, pole_fallback=fallback)


def _require_su2(angles: AngleCoordinates) -> None:
    if angles.n != 2:
        msg = f"Convention d'angle moitié réservée à SU(2) (reçu n={angles.n})"
        raise DimensionError(msg)


def half_angle(angles: AngleCoordinates) -> float:
    """θ′ = 2ξ₀ de la forme à phase fixée (cos(θ′/2), e^{iΔφ} sin(θ′/2))."""
    _require_su2(angles)
    return 2.0 * angles.xi[0]


def polar_angle(angles: AngleCoordinates, convention: AngleConvention) -> float:
    """Angle polaire de SU(2) dans la convention demandée."""
    if convention is AngleConvention.HALF_ANGLE:
        return half_angle(angles)
    _require_su2(angles)
    return angles.xi[0]


def bloch_vector(angles: AngleCoordinates) -> tuple[float, float, float]:
    """(⟨σ₁⟩, ⟨σ₂⟩, ⟨σ₃⟩) = (sin θ′ cos Δφ, sin θ′ sin Δφ, cos θ′), Δφ = φ₁ - φ₀."""
    theta_prime = half_angle(angles)
    delta = angles.phi[1] - angles.phi[0]
    return (
        math.sin(theta_prime) * math.cos(delta),
        math.sin(theta_prime) * math.sin(delta),
        math.cos(theta_prime),
    )
