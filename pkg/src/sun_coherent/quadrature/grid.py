"""Grilles de quadrature produit sur l'espace quotient SU(n)/SU(n-1).

FR: Chaque angle polaire ξ_k est intégré par Gauss-Legendre dans la
    variable x = cos²ξ_k sur [0, 1] (nœuds intérieurs à (0, π/2), poids
    positifs) ; chaque phase φ_k par la règle uniforme à Q points sur
    [0, 2π). Les poids incluent la densité de mesure dμ_n.
EN: Gauss-Legendre in x = cos²ξ for each polar angle, uniform Q-point rule
    for each phase; weights include the dμ_n density.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from numpy.typing import NDArray

from sun_coherent.errors import DimensionError
from sun_coherent.fundamental.geometry import measure_density_array

logger = logging.getLogger(__name__)

FloatArray = NDArray[np.float64]

DEFAULT_CHUNK = 8192


def polar_rule(order: int) -> tuple[FloatArray, FloatArray]:
    """Nœuds ξ et poids en ξ de la règle à `order` points.

    FR: ∫₀^{π/2} f(ξ) dξ ≈ Σ w_i f(ξ_i) avec ξ_i = arccos √x_i et
        w_i = w_x,i / (2 cos ξ_i sin ξ_i), x_i nœuds de Gauss-Legendre sur
        [0, 1]. Exacte lorsque f(ξ) = cos ξ sin ξ · p(cos²ξ) avec
        deg p ≤ 2·order - 1.
    EN: ξ nodes and ξ-space weights of the x = cos²ξ Gauss-Legendre rule.
    """
    if order < 1:
        msg = f"Ordre polaire invalide : {order}"
        raise DimensionError(msg)
    t, w = leggauss(order)
    x = 0.5 * (t + 1.0)
    weights_x = 0.5 * w
    nodes = np.arccos(np.sqrt(x))
    weights = weights_x / (2.0 * np.cos(nodes) * np.sin(nodes))
    return nodes, weights


def phase_rule(order: int) -> FloatArray:
    """Nœuds uniformes 2πq/Q, q = 0…Q-1 (poids 2π/Q)."""
    if order < 1:
        msg = f"Ordre de phase invalide : {order}"
        raise DimensionError(msg)
    return 2.0 * math.pi * np.arange(order, dtype=np.float64) / order


@dataclass(frozen=True)
class QuadratureGrid:
    """Grille produit (n-1) dimensions polaires × n dimensions de phase."""

    n: int
    polar_order: int
    phase_order: int
    polar_nodes: FloatArray
    polar_weights: FloatArray
    phase_nodes: FloatArray

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.polar_order,) * (self.n - 1) + (self.phase_order,) * self.n

    @property
    def size(self) -> int:
        return math.prod(self.shape)

    @property
    def phase_weight(self) -> float:
        return 2.0 * math.pi / self.phase_order

    def is_exact_for(self, N: int) -> bool:
        """Vrai si P ≥ N+n et Q ≥ 2N+1."""
        return self.polar_order >= N + self.n and self.phase_order >= 2 * N + 1

    def chunks(
        self, chunk_size: int = DEFAULT_CHUNK
    ) -> Iterator[tuple[FloatArray, FloatArray, FloatArray]]:
        """Parcourt la grille par blocs (xi, phi, poids) dans l'ordre des indices.

        FR: xi de forme (m, n-1), phi (m, n), poids (m,) incluant dμ_n.
        EN: Blocks in flat grid-index order, weights include dμ_n.
        """
        polar_dims = self.n - 1
        phase_factor = self.phase_weight**self.n
        for start in range(0, self.size, chunk_size):
            flat = np.arange(start, min(start + chunk_size, self.size))
            indices = np.unravel_index(flat, self.shape)
            polar_idx = np.stack(indices[:polar_dims], axis=1) if polar_dims else None
            phase_idx = np.stack(indices[polar_dims:], axis=1)
            if polar_idx is None:
                xi = np.empty((flat.size, 0), dtype=np.float64)
                jacobian = np.ones(flat.size, dtype=np.float64)
            else:
                xi = self.polar_nodes[polar_idx]
                jacobian = np.prod(self.polar_weights[polar_idx], axis=1)
            phi = self.phase_nodes[phase_idx]
            weights = measure_density_array(xi) * jacobian * phase_factor
            yield xi, phi, weights


def build_grid(n: int, P: int, Q: int) -> QuadratureGrid:
    """Grille produit d'ordre polaire P et d'ordre de phase Q.

    Raises:
        DimensionError: Si n < 1, P < 1 ou Q < 1.
    """
    if n < 1:
        msg = f"Dimension invalide : n={n}"
        raise DimensionError(msg)
    nodes, weights = polar_rule(P)
    grid = QuadratureGrid(
        n=n,
        polar_order=P,
        phase_order=Q,
        polar_nodes=nodes,
        polar_weights=weights,
        phase_nodes=phase_rule(Q),
    )
    logger.info("Grille SU(%d) : P=%d, Q=%d, %d points", n, P, Q, grid.size)
    return grid


def default_grid(n: int, N: int) -> QuadratureGrid:
    """Grille aux seuils d'exactitude : P = N + n, Q = 2N + 1."""
    if N < 0:
        msg = f"Taille de représentation négative : N={N}"
        raise DimensionError(msg)
    return build_grid(n, N + n, 2 * N + 1)
