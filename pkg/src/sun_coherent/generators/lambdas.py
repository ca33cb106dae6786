"""Base λ des générateurs hermitiens de SU(n).

FR: Générateurs non diagonaux Θ^h_j = e^h_j + e^j_h, β^h_j = -i(e^h_j - e^j_h)
    et diagonaux η^m_m, numérotés par blocs : pour j = 2…n,
    Θ^1_j, β^1_j, …, Θ^{j-1}_j, β^{j-1}_j, η^{j-1}_{j-1}. Pour n = 2 on
    retrouve les matrices de Pauli, pour n = 3 celles de Gell-Mann.
EN: Off-diagonal Θ, β and diagonal η generators in block numbering;
    Pauli matrices for n = 2, Gell-Mann matrices for n = 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from sun_coherent.errors import DimensionError, IndexRangeError
from sun_coherent.generators.elementary import elementary_matrix
from sun_coherent.models.enums import GeneratorKind, PrimedLambda

ComplexMatrix = NDArray[np.complex128]


@dataclass(frozen=True)
class GeneratorLabel:
    """Étiquette d'un générateur : famille et indices (haut, bas)."""

    kind: GeneratorKind
    upper: int
    lower: int

    def __str__(self) -> str:
        return f"{self.kind.value}^{self.upper}_{self.lower}"


@dataclass(frozen=True)
class GeneratorSet:
    """Les n²-1 matrices λ de SU(n) dans l'ordre par blocs.

    FR: Les matrices sont en lecture seule ; l'indexation λ_i est 1-basée.
    EN: Matrices are read-only; λ_i indexing is 1-based.
    """

    n: int
    matrices: tuple[ComplexMatrix, ...]
    labels: tuple[GeneratorLabel, ...]

    def __len__(self) -> int:
        return len(self.matrices)

    def lam(self, index: int) -> ComplexMatrix:
        """Retourne λ_index (1-basé)."""
        if not 1 <= index <= len(self.matrices):
            msg = f"λ_{index} n'existe pas pour SU({self.n}) (1…{len(self.matrices)})"
            raise IndexRangeError(msg)
        return self.matrices[index - 1]

    def by_label(self, label: str) -> ComplexMatrix:
        """Retourne le générateur d'étiquette donnée (ex. « beta^2_3 »)."""
        for candidate, matrix in zip(self.labels, self.matrices, strict=True):
            if str(candidate) == label:
                return matrix
        msg = f"Étiquette de générateur inconnue : {label!r}"
        raise KeyError(msg)


def theta(h: int, j: int, n: int) -> ComplexMatrix:
    """Θ^h_j = e^h_j + e^j_h."""
    return elementary_matrix(h, j, n) + elementary_matrix(j, h, n)


def beta(h: int, j: int, n: int) -> ComplexMatrix:
    """β^h_j = -i (e^h_j - e^j_h)."""
    return -1j * (elementary_matrix(h, j, n) - elementary_matrix(j, h, n))


def eta(m: int, n: int) -> ComplexMatrix:
    """η^m_m = √(2/(m(m+1))) (Σ_{j≤m} e^j_j - m e^{m+1}_{m+1}), 1 ≤ m ≤ n-1."""
    if not 1 <= m <= n - 1:
        msg = f"η^{m}_{m} n'existe pas pour n={n} (1 ≤ m ≤ n-1)"
        raise IndexRangeError(msg)
    diagonal = np.zeros(n, dtype=np.complex128)
    diagonal[:m] = 1.0
    diagonal[m] = -m
    return math.sqrt(2.0 / (m * (m + 1))) * np.diag(diagonal)


def lambda_index(kind: GeneratorKind, upper: int, lower: int) -> int:
    """Position 1-basée d'un générateur dans la numérotation par blocs.

    FR: Le bloc j commence à (j-1)² ; Θ^h_j et β^h_j occupent les positions
        (j-1)² + 2(h-1) et (j-1)² + 2(h-1) + 1, η^{j-1}_{j-1} la position j²-1.
    EN: Block j starts at (j-1)².
    """
    if kind is GeneratorKind.ETA:
        return (upper + 1) ** 2 - 1
    offset = 0 if kind is GeneratorKind.THETA else 1
    return (lower - 1) ** 2 + 2 * (upper - 1) + offset


@lru_cache(maxsize=32)
def lambda_set(n: int) -> GeneratorSet:
    """Construit la base λ de SU(n).

    Raises:
        DimensionError: Si n < 2.
    """
    if n < 2:
        msg = f"SU(n) exige n ≥ 2 (reçu n={n})"
        raise DimensionError(msg)

    matrices: list[ComplexMatrix] = []
    labels: list[GeneratorLabel] = []
    for j in range(2, n + 1):
        for h in range(1, j):
            matrices.extend([theta(h, j, n), beta(h, j, n)])
            labels.extend(
                [
                    GeneratorLabel(GeneratorKind.THETA, h, j),
                    GeneratorLabel(GeneratorKind.BETA, h, j),
                ]
            )
        matrices.append(eta(j - 1, n))
        labels.append(GeneratorLabel(GeneratorKind.ETA, j - 1, j - 1))

    for matrix in matrices:
        matrix.flags.writeable = False
    return GeneratorSet(n=n, matrices=tuple(matrices), labels=tuple(labels))


def primed_lambda(n: int, which: PrimedLambda) -> ComplexMatrix:
    """Combinaisons λ₈′ = (√3 λ₈ - λ₃)/2 et λ₁₅′ = (√6 λ₁₅ - √3 λ₈)/3.

    FR: λ₈′ vaut diag(0, 1, -1, 0, …) et λ₁₅′ diag(0, 0, 1, -1, 0, …) :
        le σ₃ de SU(2) plongé dans le bloc inférieur correspondant.
    EN: The SU(2) σ₃ embedded in the corresponding lower block.

    Raises:
        DimensionError: Si n < 3 (λ₈′) ou n < 4 (λ₁₅′).
    """
    required = 3 if which is PrimedLambda.LAMBDA8 else 4
    if n < required:
        msg = f"{which.value} exige n ≥ {required} (reçu n={n})"
        raise DimensionError(msg)
    gens = lambda_set(n)
    if which is PrimedLambda.LAMBDA8:
        return (math.sqrt(3.0) * gens.lam(8) - gens.lam(3)) / 2.0
    return (math.sqrt(6.0) * gens.lam(15) - math.sqrt(3.0) * gens.lam(8)) / 3.0
