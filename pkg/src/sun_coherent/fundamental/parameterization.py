"""Paramétrisation récursive L·M·R des éléments de SU(n).

FR: Un élément de SU(n) est le produit L_{n-1} M(θ, φ) R_{n-1} où
    L = diag(1, X), R = diag(1, Y) avec X, Y ∈ SU(n-1), et M un bloc
    SU(2) en lignes/colonnes 1-2. La récursion s'arrête à SU(2).
EN: An SU(n) element is L_{n-1} M(θ, φ) R_{n-1} with L = diag(1, X),
    R = diag(1, Y); the recursion stops at SU(2).
"""

from __future__ import annotations

import logging
import math

import numpy as np
from numpy.typing import NDArray

from sun_coherent.errors import DimensionError, MalformedTreeError
from sun_coherent.models.angles import AngleCoordinates
from sun_coherent.models.trees import DecompositionTree, GroupAngles, SU2Angles

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]


def su2_matrix(theta: float, phi1: float, phi2: float) -> ComplexMatrix:
    """g(θ, φ₁, φ₂) = [[e^{iφ₁}cos θ, -e^{-iφ₂}sin θ], [e^{iφ₂}sin θ, e^{-iφ₁}cos θ]]."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [
            [np.exp(1j * phi1) * c, -np.exp(-1j * phi2) * s],
            [np.exp(1j * phi2) * s, np.exp(-1j * phi1) * c],
        ],
        dtype=np.complex128,
    )


def embed_block(block: ComplexMatrix, n: int, offset: int) -> ComplexMatrix:
    """Plonge une matrice carrée dans I_n à partir de la ligne `offset` (0-basée)."""
    size = block.shape[0]
    if offset < 0 or offset + size > n:
        msg = f"Bloc {size}×{size} hors de I_{n} à l'offset {offset}"
        raise DimensionError(msg)
    result = np.eye(n, dtype=np.complex128)
    result[offset : offset + size, offset : offset + size] = block
    return result


def middle_matrix(n: int, theta: float, phi: float) -> ComplexMatrix:
    """M(θ, φ) : bloc [[e^{iφ}cos θ, -sin θ], [sin θ, e^{-iφ}cos θ]] ⊕ I_{n-2}.

    Raises:
        DimensionError: Si n < 2.
    """
    if n < 2:
        msg = f"M(θ, φ) exige n ≥ 2 (reçu n={n})"
        raise DimensionError(msg)
    c, s = math.cos(theta), math.sin(theta)
    block = np.array(
        [[np.exp(1j * phi) * c, -s], [s, np.exp(-1j * phi) * c]],
        dtype=np.complex128,
    )
    return embed_block(block, n, 0)


def build_group_element(tree: GroupAngles) -> ComplexMatrix:
    """Assemble récursivement L·M·R à partir d'un arbre de décomposition.

    Raises:
        MalformedTreeError: Si un nœud n'est ni un arbre ni un triplet SU(2),
            ou si ses sous-arbres décrivent des groupes différents.
    """
    if isinstance(tree, SU2Angles):
        return su2_matrix(tree.theta, tree.phi1, tree.phi2)
    if not isinstance(tree, DecompositionTree):
        msg = f"Nœud d'arbre inattendu : {type(tree).__name__}"
        raise MalformedTreeError(msg)
    left_n, right_n = _node_size(tree.left), _node_size(tree.right)
    if left_n != right_n:
        msg = f"Sous-arbres incohérents : gauche SU({left_n}), droite SU({right_n})"
        raise MalformedTreeError(msg)

    n = left_n + 1
    left = embed_block(build_group_element(tree.left), n, 1)
    right = embed_block(build_group_element(tree.right), n, 1)
    return left @ middle_matrix(n, tree.theta, tree.phi) @ right


def _node_size(node: object) -> int:
    if isinstance(node, SU2Angles):
        return 2
    if isinstance(node, DecompositionTree):
        return _node_size(node.left) + 1
    msg = f"Nœud d'arbre inattendu : {type(node).__name__}"
    raise MalformedTreeError(msg)


def angles_to_tree(
    angles: AngleCoordinates, right: GroupAngles | None = None
) -> GroupAngles:
    """Arbre dont la première colonne est l'état cohérent de `angles`.

    FR: ξ_k et φ_k descendent la branche gauche ; le triplet de base reçoit
        (ξ_{n-2}, φ_{n-2}, φ_{n-1}). Le facteur droit (identité par défaut)
        ne touche pas la première colonne.
    EN: ξ_k, φ_k go down the left spine; the right factor (identity by
        default) leaves the first column unchanged.
    """
    n = angles.n
    if n < 2:
        msg = f"Un arbre de décomposition exige n ≥ 2 (reçu n={n})"
        raise DimensionError(msg)
    if right is not None and right.n != n - 1:
        msg = f"Facteur droit SU({right.n}) incompatible avec SU({n})"
        raise MalformedTreeError(msg)
    if n == 2:
        return SU2Angles(theta=angles.xi[0], phi1=angles.phi[0], phi2=angles.phi[1])
    tail = AngleCoordinates(xi=angles.xi[1:], phi=angles.phi[1:])
    return DecompositionTree(
        theta=angles.xi[0],
        phi=angles.phi[0],
        left=angles_to_tree(tail),
        right=right if right is not None else DecompositionTree.identity(n - 1),
    )


def tree_to_angles(tree: GroupAngles) -> AngleCoordinates:
    """Lit (ξ, φ) le long de la branche gauche (inverse de angles_to_tree)."""
    xi: list[float] = []
    phi: list[float] = []
    node: GroupAngles = tree
    while isinstance(node, DecompositionTree):
        xi.append(node.theta)
        phi.append(node.phi)
        node = node.left
    xi.append(node.theta)
    phi.extend([node.phi1, node.phi2])
    return AngleCoordinates(xi=xi, phi=phi)


def unitarity_deviation(matrix: ComplexMatrix) -> float:
    """max |U†U - I|."""
    n = matrix.shape[0]
    return float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(n))))
