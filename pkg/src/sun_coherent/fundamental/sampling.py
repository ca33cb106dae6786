"""Tirages aléatoires reproductibles : éléments de Haar et angles."""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray

from sun_coherent.errors import DimensionError
from sun_coherent.models.angles import HALF_PI, TWO_PI, AngleCoordinates


def haar_random_su(n: int, rng: np.random.Generator) -> NDArray[np.complex128]:
    """Élément de SU(n) distribué selon la mesure de Haar.

    FR: QR d'une matrice gaussienne complexe, phases de R reportées sur Q,
        puis division par la racine n-ième du déterminant.
    EN: QR of a complex Gaussian matrix with R-phase correction, divided by
        the n-th root of the determinant.
    """
    if n < 1:
        msg = f"Dimension invalide : n={n}"
        raise DimensionError(msg)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diagonal = np.diagonal(r)
    q = q * (diagonal / np.abs(diagonal))
    det = complex(np.linalg.det(q))
    result: NDArray[np.complex128] = q / det ** (1.0 / n)
    return result


def random_angles(
    n: int, rng: np.random.Generator, margin: float = 0.0
) -> AngleCoordinates:
    """Angles uniformes : ξ dans [margin, π/2 - margin], φ dans [0, 2π)."""
    if n < 1:
        msg = f"Dimension invalide : n={n}"
        raise DimensionError(msg)
    if not 0.0 <= margin < HALF_PI / 2:
        msg = f"Marge polaire invalide : {margin!r}"
        raise ValueError(msg)
    xi = rng.uniform(margin, HALF_PI - margin, size=n - 1)
    phi = rng.uniform(0.0, TWO_PI, size=n)
    return AngleCoordinates(xi=xi.tolist(), phi=phi.tolist())
