"""Algèbre des générateurs : commutateurs et exponentielles hermitiennes.

FR: Vérifie la relation [β^h_j, Θ^k_e] de la base λ et calcule exp(i t H)
    par diagonalisation de H hermitienne (unitarité exacte à l'arrondi près).
EN: Checks the [β, Θ] relation and computes exp(i t H) through the
    eigendecomposition of a Hermitian H.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray

from sun_coherent.errors import DimensionError, NonHermitianError
from sun_coherent.generators.elementary import elementary_matrix
from sun_coherent.generators.lambdas import GeneratorSet, beta, theta

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]

HERMITIAN_TOL = 1e-10


class CommutatorDeviation(NamedTuple):
    """Écart maximal de l'identité de commutation sur tous les tuples."""

    max_deviation: float
    tuples_checked: int


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """[A, B] = AB - BA."""
    return a @ b - b @ a


def theta_symbol(a: int, b: int, n: int) -> ComplexMatrix:
    """Θ^a_b prolongé : Θ^b_a si a > b, et 2 e^a_a si a = b."""
    if a == b:
        return 2.0 * elementary_matrix(a, a, n)
    return theta(min(a, b), max(a, b), n)


def _delta(a: int, b: int) -> float:
    return 1.0 if a == b else 0.0


def verify_beta_theta_commutators(n: int) -> CommutatorDeviation:
    """Écart max de [β^h_j, Θ^k_e] à sa forme développée, h<j et k<e.

    FR: Forme attendue : -i δ^k_j Θ^h_e + i δ^h_e Θ^k_j + i δ^k_h Θ^j_e
        - i δ^j_e Θ^k_h, avec la convention de theta_symbol.
    EN: Expected right-hand side uses the theta_symbol convention.
    """
    if n < 2:
        msg = f"SU(n) exige n ≥ 2 (reçu n={n})"
        raise DimensionError(msg)
    pairs = list(combinations(range(1, n + 1), 2))
    worst = 0.0
    for h, j in pairs:
        b_hj = beta(h, j, n)
        for k, e in pairs:
            lhs = commutator(b_hj, theta(k, e, n))
            rhs = (
                -1j * _delta(k, j) * theta_symbol(h, e, n)
                + 1j * _delta(h, e) * theta_symbol(k, j, n)
                + 1j * _delta(k, h) * theta_symbol(j, e, n)
                - 1j * _delta(j, e) * theta_symbol(k, h, n)
            )
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    logger.debug("Commutateurs [β, Θ] de SU(%d) : écart max %.3e", n, worst)
    return CommutatorDeviation(max_deviation=worst, tuples_checked=len(pairs) ** 2)


def hermiticity_deviation(gens: GeneratorSet) -> float:
    """max |M - M†| et |tr M| sur toute la base."""
    worst = 0.0
    for matrix in gens.matrices:
        worst = max(
            worst,
            float(np.max(np.abs(matrix - matrix.conj().T))),
            abs(complex(np.trace(matrix))),
        )
    return worst


def trace_orthonormality_deviation(gens: GeneratorSet) -> float:
    """max |tr(λ_a λ_b) - 2 δ_ab| sur toutes les paires."""
    stacked = np.stack(gens.matrices)
    gram = np.einsum("aij,bji->ab", stacked, stacked)
    return float(np.max(np.abs(gram - 2.0 * np.eye(len(gens)))))


def herm_exp(hamiltonian: ComplexMatrix, t: float) -> ComplexMatrix:
    """exp(i t H) pour H hermitienne, via H = V diag(w) V†.

    Raises:
        NonHermitianError: Si ‖H - H†‖_max dépasse 1e-10 ou si H contient des
            valeurs non finies.
    """
    h = np.asarray(hamiltonian, dtype=np.complex128)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        msg = f"Matrice carrée attendue, forme reçue {h.shape}"
        raise DimensionError(msg)
    if not np.isfinite(h).all():
        msg = "Matrice à coefficients non finis (NaN ou infini)"
        raise NonHermitianError(msg)
    asymmetry = float(np.max(np.abs(h - h.conj().T))) if h.size else 0.0
    if asymmetry > HERMITIAN_TOL:
        msg = f"Matrice non hermitienne (écart {asymmetry:.3e} > {HERMITIAN_TOL:.0e})"
        raise NonHermitianError(msg)
    eigenvalues, eigenvectors = np.linalg.eigh(0.5 * (h + h.conj().T))
    phases = np.exp(1j * t * eigenvalues)
    result: ComplexMatrix = (eigenvectors * phases) @ eigenvectors.conj().T
    return result
