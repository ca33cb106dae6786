"""Volume de l'espace quotient, résolution de l'unité et moments scalaires.

FR: Toutes les sommes suivent l'ordre des indices de la grille, de sorte
    que le résultat est reproductible bit à bit pour une grille donnée.
EN: Sums follow grid-index order and are bit-reproducible for a given grid.
"""

from __future__ import annotations

import cmath
import logging
import math

import numpy as np
from numpy.typing import NDArray

from sun_coherent.errors import DimensionError
from sun_coherent.models.reports import UnityCheck, VolumeReport
from sun_coherent.quadrature.grid import QuadratureGrid, build_grid, default_grid, polar_rule
from sun_coherent.symrep.basis import basis
from sun_coherent.symrep.states import coherent_amplitudes

logger = logging.getLogger(__name__)


def _check_grid(n: int, grid: QuadratureGrid) -> None:
    if grid.n != n:
        msg = f"Grille de SU({grid.n}) fournie pour SU({n})"
        raise DimensionError(msg)


def volume_exact(n: int) -> float:
    """(2π)^n / (2^{n-1} (n-1)!)."""
    return (2.0 * math.pi) ** n / (2 ** (n - 1) * math.factorial(n - 1))


def coset_volume(n: int, grid: QuadratureGrid) -> float:
    """∫ dμ_n par quadrature."""
    _check_grid(n, grid)
    total = 0.0
    for _, _, weights in grid.chunks():
        total += float(np.sum(weights))
    return total


def volume_report(n: int, grid: QuadratureGrid | None = None) -> VolumeReport:
    """Volume par quadrature comparé à la forme close."""
    grid = grid or default_grid(n, 0)
    volume = coset_volume(n, grid)
    exact = volume_exact(n)
    return VolumeReport(
        n=n,
        volume=volume,
        exact=exact,
        delta=abs(volume - exact),
        polar_order=grid.polar_order,
        phase_order=grid.phase_order,
    )


def unity_prefactor(n: int, N: int) -> float:
    """(N+n-1)! / (2π^n N!)."""
    return math.factorial(N + n - 1) / (2.0 * math.pi**n * math.factorial(N))


def resolution_of_unity(
    n: int, N: int, grid: QuadratureGrid
) -> NDArray[np.complex128]:
    """Préfacteur × Σ_w |n^N_n⟩⟨n^N_n| sur la grille (doit valoir I).

    FR: Une grille sous les seuils P ≥ N+n, Q ≥ 2N+1 déclenche un
        avertissement avec l'écart mesuré.
    EN: Sub-threshold grids log a warning with the measured residual.
    """
    _check_grid(n, grid)
    if N < 0:
        msg = f"Taille de représentation négative : N={N}"
        raise DimensionError(msg)
    occ_basis = basis(n, N)
    dim = len(occ_basis)
    accumulator = np.zeros((dim, dim), dtype=np.complex128)
    for xi, phi, weights in grid.chunks():
        amplitudes = coherent_amplitudes(occ_basis, xi, phi)
        accumulator += (amplitudes.T * weights) @ amplitudes.conj()
    matrix: NDArray[np.complex128] = unity_prefactor(n, N) * accumulator

    if not grid.is_exact_for(N):
        residual = float(np.max(np.abs(matrix - np.eye(dim))))
        logger.warning(
            "Grille sous les seuils d'exactitude (P=%d < %d ou Q=%d < %d) : écart %.3e",
            grid.polar_order,
            N + n,
            grid.phase_order,
            2 * N + 1,
            residual,
        )
    return matrix


def unity_check(n: int, N: int, grid: QuadratureGrid | None = None) -> UnityCheck:
    """Écart max |M - I| de la résolution de l'unité."""
    grid = grid or default_grid(n, N)
    matrix = resolution_of_unity(n, N, grid)
    dim = matrix.shape[0]
    return UnityCheck(
        n=n,
        N=N,
        dim=dim,
        prefactor=unity_prefactor(n, N),
        max_abs_deviation=float(np.max(np.abs(matrix - np.eye(dim)))),
        polar_order=grid.polar_order,
        phase_order=grid.phase_order,
        exact_grid=grid.is_exact_for(N),
    )


def unity_refinement_gap(n: int, N: int, grid: QuadratureGrid | None = None) -> float:
    """max |M₂ - M| entre la grille et la grille d'ordres (2P, 2Q)."""
    grid = grid or default_grid(n, N)
    refined = build_grid(n, 2 * grid.polar_order, 2 * grid.phase_order)
    gap = resolution_of_unity(n, N, refined) - resolution_of_unity(n, N, grid)
    return float(np.max(np.abs(gap)))


def offdiagonal_max(matrix: NDArray[np.complex128]) -> float:
    """max |M_ij|, i ≠ j."""
    off = matrix - np.diag(np.diagonal(matrix))
    return float(np.max(np.abs(off))) if off.size else 0.0


def xi_moment(m: int, k: int, P: int) -> float:
    """∫₀^{π/2} cos^{2(m-k)+1}ξ sin^{2k+1}ξ dξ par la règle polaire à P points."""
    if not 0 <= k <= m:
        msg = f"Moment polaire : 0 ≤ k ≤ m exigé (m={m}, k={k})"
        raise DimensionError(msg)
    nodes, weights = polar_rule(P)
    integrand = np.cos(nodes) ** (2 * (m - k) + 1) * np.sin(nodes) ** (2 * k + 1)
    return float(np.sum(weights * integrand))


def xi_moment_exact(m: int, k: int) -> float:
    """k! (m-k)! / (2 (m+1)!)."""
    return math.factorial(k) * math.factorial(m - k) / (2.0 * math.factorial(m + 1))


def phase_moment(k: int, Q: int) -> complex:
    """Σ_q (2π/Q) e^{ik·2πq/Q} ; nul pour 0 < |k| < Q."""
    step = 2.0 * math.pi / Q
    return sum((step * cmath.exp(1j * k * step * q) for q in range(Q)), 0j)
