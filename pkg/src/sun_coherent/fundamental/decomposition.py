"""Décomposition inverse U = L·M·R (éléments de SU(n) vers arbre d'angles).

FR: À chaque niveau, θ et φ sont lus sur U₁₁, la sous-colonne (U₂₁…U_n1)
    est ramenée à (r, 0, …, 0) par une chaîne de rotations de Givens
    complexes de déterminant 1, puis le bloc résiduel Y est décomposé
    récursivement. La chaîne étant dans SU(n-1), aucune correction de
    déterminant n'est nécessaire.
EN: θ, φ come from U₁₁; the sub-column is reduced by a chain of unit
    determinant complex Givens rotations, and the residual block Y is
    decomposed recursively.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from numpy.typing import NDArray

from sun_coherent.errors import DimensionError, NonUnitaryError
from sun_coherent.fundamental.parameterization import embed_block, middle_matrix
from sun_coherent.models.trees import DecompositionTree, GroupAngles, SU2Angles

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]
ComplexVector = NDArray[np.complex128]

DEFAULT_TOL = 1e-8


def givens_chain(column: ComplexVector) -> ComplexMatrix:
    """Matrice G ∈ SU(m) telle que G·column = (‖column‖, 0, …, 0)ᵀ.

    FR: Éliminations de bas en haut avec des blocs
        [[a*/ρ, b*/ρ], [-b/ρ, a/ρ]], ρ = √(|a|²+|b|²). Un couple nul donne
        l'identité.
    EN: Bottom-up eliminations with unit-determinant 2×2 blocks.
    """
    vector = np.array(column, dtype=np.complex128)
    m = vector.shape[0]
    total = np.eye(m, dtype=np.complex128)
    for k in range(m - 1, 0, -1):
        a, b = vector[k - 1], vector[k]
        rho = math.hypot(abs(a), abs(b))
        if rho == 0.0:
            continue
        rotation = np.array(
            [[np.conj(a) / rho, np.conj(b) / rho], [-b / rho, a / rho]],
            dtype=np.complex128,
        )
        step = embed_block(rotation, m, k - 1)
        vector = step @ vector
        vector[k] = 0.0
        total = step @ total
    return total


def _su2_angles(u: ComplexMatrix) -> SU2Angles:
    a, b = u[0, 0], u[1, 0]
    return SU2Angles(
        theta=math.atan2(abs(b), abs(a)),
        phi1=float(np.angle(a)),
        phi2=float(np.angle(b)),
    )


def _decompose(u: ComplexMatrix) -> GroupAngles:
    n = u.shape[0]
    if n == 2:
        return _su2_angles(u)

    head, sub = u[0, 0], u[1:, 0]
    radius = float(np.linalg.norm(sub))
    theta = math.atan2(radius, abs(head))
    phi = float(np.angle(head))

    if radius == 0.0:
        x = np.eye(n - 1, dtype=np.complex128)
    else:
        x = givens_chain(sub).conj().T
    left = embed_block(x, n, 1)
    middle = middle_matrix(n, theta, phi)
    residual = middle.conj().T @ left.conj().T @ u
    logger.debug(
        "Niveau SU(%d) : θ=%.6f φ=%.6f, fuite hors bloc %.2e",
        n,
        theta,
        phi,
        float(np.max(np.abs(residual[1:, 0]))),
    )
    return DecompositionTree(
        theta=theta,
        phi=phi,
        left=_decompose(x),
        right=_decompose(residual[1:, 1:]),
    )


def decompose(matrix: ComplexMatrix, tol: float = DEFAULT_TOL) -> GroupAngles:
    """Décompose U ∈ SU(n) en arbre L·M·R canonique.

    FR: Seule l'égalité build_group_element(decompose(U)) = U est garantie ;
        pour n ≥ 4 la paramétrisation est redondante et l'arbre retourné est
        celui de la chaîne de Givens.
    EN: Only the round trip is guaranteed; the tree is the Givens-chain one.

    Raises:
        DimensionError: Si U n'est pas carrée de taille ≥ 2.
        NonUnitaryError: Si ‖U†U - I‖_max ou |det U - 1| dépasse `tol` ou si U
            contient des valeurs non finies.
    """
    u = np.asarray(matrix, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1] or u.shape[0] < 2:
        msg = f"Matrice carrée n×n (n ≥ 2) attendue, forme reçue {u.shape}"
        raise DimensionError(msg)
    n = u.shape[0]
    if not np.isfinite(u).all():
        msg = "Matrice à coefficients non finis (NaN ou infini)"
        raise NonUnitaryError(msg)
    unitarity = float(np.max(np.abs(u.conj().T @ u - np.eye(n))))
    if unitarity > tol:
        msg = f"Matrice non unitaire : ‖U†U - I‖_max = {unitarity:.3e} > {tol:.1e}"
        raise NonUnitaryError(msg)
    det_gap = abs(complex(np.linalg.det(u)) - 1.0)
    if det_gap > tol:
        msg = f"Déterminant différent de 1 : |det U - 1| = {det_gap:.3e} > {tol:.1e}"
        raise NonUnitaryError(msg)

    logger.info("Décomposition L·M·R d'un élément de SU(%d)", n)
    return _decompose(u)
