"""Décomposition de Gauss des éléments de SU(2).

FR: g(θ, φ₁, φ₂) = exp(ζ e²₁) exp(ν σ₃) exp(-ζ* e¹₂) exp(iφ₁σ₃) avec
    ζ = e^{i(φ₂-φ₁)} tan θ et ν = ln cos θ. Diverge en θ = π/2.
EN: Lower-triangular, diagonal, upper-triangular and phase exponentials;
    diverges at θ = π/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import expm

from sun_coherent.errors import PoleError
from sun_coherent.fundamental.parameterization import su2_matrix
from sun_coherent.generators.elementary import elementary_matrix
from sun_coherent.generators.lambdas import lambda_set

# cos θ sous ce seuil : pôle de la carte
POLE_TOL = 1e-12


@dataclass(frozen=True)
class GaussParameters:
    """Coordonnées (ζ, ν) ; ν ≤ 0 sur le domaine θ ∈ [0, π/2)."""

    zeta: complex
    nu: float


def gauss_decomposition_su2(theta: float, phi1: float, phi2: float) -> GaussParameters:
    """ζ = e^{i(φ₂-φ₁)} tan θ, ν = ln cos θ.

    Raises:
        PoleError: Si cos θ s'annule (θ = π/2).
    """
    cosine = math.cos(theta)
    if abs(cosine) <= POLE_TOL:
        msg = f"Décomposition de Gauss indéfinie en θ = π/2 (θ={theta!r})"
        raise PoleError(msg)
    return GaussParameters(
        zeta=cmath.exp(1j * (phi2 - phi1)) * math.tan(theta),
        nu=math.log(abs(cosine)),
    )


def gauss_product(params: GaussParameters, phi1: float) -> NDArray[np.complex128]:
    """Produit des quatre exponentielles (scipy.linalg.expm)."""
    sigma3 = lambda_set(2).lam(3)
    lower = expm(params.zeta * elementary_matrix(2, 1, 2))
    diagonal = expm(params.nu * sigma3)
    upper = expm(-np.conj(params.zeta) * elementary_matrix(1, 2, 2))
    phase = expm(1j * phi1 * sigma3)
    result: NDArray[np.complex128] = lower @ diagonal @ upper @ phase
    return result


def gauss_reconstruction_deviation(theta: float, phi1: float, phi2: float) -> float:
    """max |produit de Gauss - g(θ, φ₁, φ₂)|."""
    params = gauss_decomposition_su2(theta, phi1, phi2)
    gap = gauss_product(params, phi1) - su2_matrix(theta, phi1, phi2)
    return float(np.max(np.abs(gap)))
