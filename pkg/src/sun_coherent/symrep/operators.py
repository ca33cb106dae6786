"""Opérateurs d'échelle et de Cartan de la représentation symétrique.

FR: Relèvement de seconde quantification G ↦ Σ G_hj a_h† a_j sur la base
    d'occupation. lift(e^h_j) envoie m sur m + δ_h - δ_j avec l'élément
    √((m_h+1) m_j) ; lift(e^h_h) est le nombre m_h. Les opérateurs de
    montée (h < j), de descente (h > j) et de Cartan (η^h_h) en découlent.
EN: Second-quantized lift G ↦ Σ G_hj a_h† a_j on the occupation basis;
    ladder and Cartan operators are lifts of e^h_j and η^h_h.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import reduce

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import sparse

from sun_coherent.errors import DimensionError, IndexRangeError
from sun_coherent.generators.algebra import herm_exp
from sun_coherent.generators.elementary import elementary_matrix
from sun_coherent.generators.lambdas import eta
from sun_coherent.symrep.basis import basis

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]


@dataclass(frozen=True)
class SparseOperator:
    """Opérateur creux (CSR) sur une base d'occupation."""

    matrix: sparse.csr_matrix

    @classmethod
    def from_triplets(
        cls,
        dim: int,
        rows: Iterable[int],
        cols: Iterable[int],
        values: Iterable[complex],
    ) -> SparseOperator:
        """Assemble depuis des triplets ; les doublons (ligne, colonne) sont sommés."""
        coo = sparse.coo_matrix(
            (
                np.fromiter(values, dtype=np.complex128),
                (np.fromiter(rows, dtype=np.int64), np.fromiter(cols, dtype=np.int64)),
            ),
            shape=(dim, dim),
        )
        matrix = coo.tocsr()
        matrix.sum_duplicates()
        matrix.eliminate_zeros()
        return cls(matrix=matrix)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    def triplets(self) -> Iterator[tuple[int, int, complex]]:
        """Parcourt les éléments non nuls (ligne, colonne, valeur)."""
        coo = self.matrix.tocoo()
        for row, col, value in zip(coo.row, coo.col, coo.data, strict=True):
            yield int(row), int(col), complex(value)

    def apply(self, vector: ArrayLike) -> NDArray[np.complex128]:
        result: NDArray[np.complex128] = self.matrix @ np.asarray(vector, dtype=np.complex128)
        return result

    def adjoint(self) -> SparseOperator:
        return SparseOperator(matrix=self.matrix.conj().T.tocsr())

    def scaled(self, factor: complex) -> SparseOperator:
        return SparseOperator(matrix=(self.matrix * factor).tocsr())

    def plus(self, other: SparseOperator) -> SparseOperator:
        self._check_dim(other)
        return SparseOperator(matrix=(self.matrix + other.matrix).tocsr())

    def commutator(self, other: SparseOperator) -> SparseOperator:
        """[self, other]."""
        self._check_dim(other)
        product = self.matrix @ other.matrix - other.matrix @ self.matrix
        return SparseOperator(matrix=product.tocsr())

    def to_dense(self) -> ComplexMatrix:
        dense: ComplexMatrix = self.matrix.toarray()
        return dense

    def max_abs_difference(self, other: SparseOperator) -> float:
        """max |A - B| élément par élément."""
        self._check_dim(other)
        gap = abs(self.matrix - other.matrix)
        return float(gap.max()) if gap.nnz else 0.0

    def _check_dim(self, other: SparseOperator) -> None:
        if other.dim != self.dim:
            msg = f"Dimensions incompatibles : {self.dim} et {other.dim}"
            raise DimensionError(msg)


def lift_generator(n: int, N: int, generator: ArrayLike) -> SparseOperator:
    """Relèvement de seconde quantification d'une matrice n×n sur basis(n, N).

    Raises:
        DimensionError: Si la matrice n'est pas n×n.
    """
    g = np.asarray(generator, dtype=np.complex128)
    if g.shape != (n, n):
        msg = f"Matrice {n}×{n} attendue pour le relèvement, forme reçue {g.shape}"
        raise DimensionError(msg)
    occ_basis = basis(n, N)
    rows: list[int] = []
    cols: list[int] = []
    values: list[complex] = []
    support = [(h, j) for h in range(n) for j in range(n) if g[h, j] != 0]
    for col, state in enumerate(occ_basis.states):
        for h, j in support:
            if h == j:
                if state[h]:
                    rows.append(col)
                    cols.append(col)
                    values.append(g[h, h] * state[h])
                continue
            if state[j] == 0:
                continue
            target = list(state)
            target[h] += 1
            target[j] -= 1
            rows.append(occ_basis.index(tuple(target)))
            cols.append(col)
            values.append(g[h, j] * math.sqrt((state[h] + 1) * state[j]))
    return SparseOperator.from_triplets(len(occ_basis), rows, cols, values)


def _check_index(n: int, *indices: int) -> None:
    for index in indices:
        if not 1 <= index <= n:
            msg = f"Indice {index} hors de [1, {n}]"
            raise IndexRangeError(msg)


def ladder_op(n: int, N: int, h: int, j: int) -> SparseOperator:
    """J^h_j = lift(e^h_j), quels que soient h et j (h = j : nombre m_h)."""
    _check_index(n, h, j)
    return lift_generator(n, N, elementary_matrix(h, j, n))


def raising_op(n: int, N: int, h: int, j: int) -> SparseOperator:
    """J^h_j pour h < j : m ↦ m + δ_h - δ_j, élément √((m_h+1) m_j)."""
    _check_index(n, h, j)
    if not h < j:
        msg = f"Opérateur de montée : h < j exigé (h={h}, j={j})"
        raise IndexRangeError(msg)
    return ladder_op(n, N, h, j)


def lowering_op(n: int, N: int, h: int, j: int) -> SparseOperator:
    """J^h_j pour h > j : adjoint de raising_op(n, N, j, h)."""
    _check_index(n, h, j)
    if not h > j:
        msg = f"Opérateur de descente : h > j exigé (h={h}, j={j})"
        raise IndexRangeError(msg)
    return ladder_op(n, N, h, j)


def cartan_op(n: int, N: int, h: int) -> SparseOperator:
    """J^h_h diagonal : √(2/(h(h+1))) (Σ_{k≤h} m_k - h m_{h+1}), 1 ≤ h ≤ n-1."""
    if not 1 <= h <= n - 1:
        msg = f"Opérateur de Cartan : 1 ≤ h ≤ {n - 1} exigé (h={h})"
        raise IndexRangeError(msg)
    return lift_generator(n, N, eta(h, n))


def number_op(n: int, N: int) -> SparseOperator:
    """N̂ = lift(I), égal à N·I sur basis(n, N)."""
    return lift_generator(n, N, np.eye(n, dtype=np.complex128))


def lift_unitary(
    n: int, N: int, factors: Iterable[tuple[ArrayLike, float]]
) -> ComplexMatrix:
    """T^N(∏ exp(i t G)) = ∏ exp(i t lift(G)) pour des G hermitiennes.

    FR: Chaque facteur est exponentié sur la représentation symétrique par
        herm_exp de son relèvement dense.
    EN: Each Hermitian factor is exponentiated on the symmetric rep.
    """
    dim = len(basis(n, N))
    matrices = [
        herm_exp(lift_generator(n, N, generator).to_dense(), parameter)
        for generator, parameter in factors
    ]
    logger.debug("Relèvement de %d facteurs sur T^%d_%d (dim %d)", len(matrices), N, n, dim)
    result: ComplexMatrix = reduce(np.matmul, matrices, np.eye(dim, dtype=np.complex128))
    return result
