"""Métrique et mesure de l'espace quotient SU(n)/SU(n-1) ≅ S^{2n-1}.

FR: ds_n² = dξ₀² + cos²ξ₀ dφ₀² + sin²ξ₀ ds_{n-1}², d'où une métrique
    diagonale dans l'ordre (ξ₀, φ₀, ξ₁, φ₁, …, φ_{n-1}). La densité de
    mesure vaut ∏_k cos ξ_k sin^{2(n-k)-3} ξ_k.
EN: Diagonal metric in (ξ₀, φ₀, ξ₁, φ₁, …, φ_{n-1}) order and the
    measure density ∏ cos ξ_k sin^{2(n-k)-3} ξ_k.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

from sun_coherent.fundamental.states import fundamental_amplitudes
from sun_coherent.models.angles import AngleCoordinates


def metric_diag(angles: AngleCoordinates) -> list[float]:
    """Coefficients diagonaux g_kk (2n-1 valeurs, ordre ξ₀, φ₀, ξ₁, …, φ_{n-1})."""
    xi = angles.xi_array()
    coefficients: list[float] = []
    prefix = 1.0
    for value in xi:
        coefficients.extend([prefix, prefix * float(np.cos(value)) ** 2])
        prefix *= float(np.sin(value)) ** 2
    coefficients.append(prefix)
    return coefficients


def measure_density_array(xi: ArrayLike) -> NDArray[np.float64]:
    """Densité de mesure vectorisée : xi de forme (M, n-1) → (M,)."""
    xi_arr = np.atleast_2d(np.asarray(xi, dtype=np.float64))
    polar = xi_arr.shape[1]
    n = polar + 1
    exponents = 2 * (n - np.arange(polar)) - 3
    density: NDArray[np.float64] = np.prod(
        np.cos(xi_arr) * np.sin(xi_arr) ** exponents, axis=1
    )
    return density


def measure_density(angles: AngleCoordinates) -> float:
    """dμ_n / (dξ dφ) au point donné."""
    return float(measure_density_array(angles.xi_array().reshape(1, -1))[0])


def coordinate_vector(angles: AngleCoordinates) -> NDArray[np.float64]:
    """Coordonnées dans l'ordre de la métrique (ξ₀, φ₀, ξ₁, φ₁, …, φ_{n-1})."""
    n = angles.n
    coords = np.empty(2 * n - 1, dtype=np.float64)
    coords[0 : 2 * n - 2 : 2] = angles.xi
    coords[1 : 2 * n - 1 : 2] = angles.phi[:-1]
    coords[-1] = angles.phi[-1]
    return coords


def _split(coords: NDArray[np.float64], n: int) -> tuple[NDArray[np.float64], ...]:
    xi = coords[0 : 2 * n - 2 : 2]
    phi = np.append(coords[1 : 2 * n - 1 : 2], coords[-1])
    return xi, phi


def embedding_slope(
    angles: AngleCoordinates, direction: ArrayLike, step: float = 1e-4
) -> float:
    """|n(x + hδ) - n(x - hδ)|² / (4h²), différence centrée.

    FR: Tend vers Σ g_kk δ_k² avec une erreur en O(h²).
    EN: Converges to Σ g_kk δ_k² with O(h²) error.
    """
    n = angles.n
    base = coordinate_vector(angles)
    delta = np.asarray(direction, dtype=np.float64)
    forward = fundamental_amplitudes(*_split(base + step * delta, n))[0]
    backward = fundamental_amplitudes(*_split(base - step * delta, n))[0]
    return float(np.sum(np.abs(forward - backward) ** 2) / (4.0 * step**2))


def metric_quadratic_form(angles: AngleCoordinates, direction: ArrayLike) -> float:
    """Σ g_kk δ_k²."""
    delta = np.asarray(direction, dtype=np.float64)
    return float(np.dot(metric_diag(angles), delta**2))
