"""Matrices élémentaires e^h_j.

FR: e^h_j vaut 1 en (h, j) et 0 ailleurs (indices 1-basés). Pour h < j ce
    sont les opérateurs de montée de la représentation fondamentale, pour
    h > j ceux de descente.
EN: e^h_j has a single 1 at (h, j), 1-based. Raising for h < j, lowering
    for h > j in the fundamental representation.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from sun_coherent.errors import IndexRangeError

ComplexMatrix = NDArray[np.complex128]


class ElementaryIndex(BaseModel):
    """Indice (h, j) d'une matrice élémentaire de taille n."""

    model_config = ConfigDict(frozen=True)

    h: int = Field(..., description="Indice de ligne 1-basé / 1-based row index")
    j: int = Field(..., description="Indice de colonne 1-basé / 1-based column index")
    n: int = Field(..., ge=1, description="Dimension du groupe / Group dimension")

    @model_validator(mode="after")
    def _check_range(self) -> ElementaryIndex:
        if not (1 <= self.h <= self.n and 1 <= self.j <= self.n):
            msg = f"Indice hors domaine : (h={self.h}, j={self.j}) pour n={self.n}"
            raise ValueError(msg)
        return self

    @classmethod
    def checked(cls, h: int, j: int, n: int) -> ElementaryIndex:
        """Construit l'indice ou lève IndexRangeError."""
        try:
            return cls(h=h, j=j, n=n)
        except ValidationError as exc:
            msg = f"Indice de matrice élémentaire invalide : (h={h}, j={j}, n={n})"
            raise IndexRangeError(msg) from exc


def elementary(idx: ElementaryIndex) -> ComplexMatrix:
    """Retourne la matrice élémentaire e^h_j de taille n×n."""
    matrix = np.zeros((idx.n, idx.n), dtype=np.complex128)
    matrix[idx.h - 1, idx.j - 1] = 1.0
    return matrix


def elementary_matrix(h: int, j: int, n: int) -> ComplexMatrix:
    """Raccourci : e^h_j avec contrôle des indices.

    Raises:
        IndexRangeError: Si (h, j) sort de [1, n]².
    """
    return elementary(ElementaryIndex.checked(h, j, n))
