"""Base des nombres d'occupation |m₁, …, m_n⟩ de la représentation symétrique.

FR: Les états de Σ m_k = N sont énumérés dans l'ordre des sommes imbriquées
    du développement des états cohérents : l'état d'indices (j₁, …, j_{n-1})
    est (N-j₁, j₁-j₂, …, j_{n-1}), j₁ variant le plus lentement, par ordre
    croissant. Le premier état est le plus haut poids (N, 0, …, 0).
EN: States with Σ m_k = N in nested-sum order, j₁ outermost ascending;
    the first state is the highest weight (N, 0, …, 0).
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray
from scipy.special import comb

from sun_coherent.errors import DimensionError, IndexRangeError

OccupationVector = tuple[int, ...]


def _nested(n: int, total: int) -> Iterator[OccupationVector]:
    if n == 1:
        yield (total,)
        return
    for j in range(total + 1):
        for tail in _nested(n - 1, j):
            yield (total - j, *tail)


def basis_size(n: int, N: int) -> int:
    """C(N+n-1, n-1)."""
    return int(comb(N + n - 1, n - 1, exact=True))


@dataclass(frozen=True)
class OccupationBasis:
    """Base ordonnée de la représentation T^N_n."""

    n: int
    N: int
    states: tuple[OccupationVector, ...]
    _positions: dict[OccupationVector, int] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_positions", {state: i for i, state in enumerate(self.states)}
        )

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[OccupationVector]:
        return iter(self.states)

    def index(self, state: OccupationVector) -> int:
        """Position d'un vecteur d'occupation dans la base."""
        try:
            return self._positions[tuple(state)]
        except KeyError as exc:
            msg = f"État {tuple(state)!r} absent de la base (n={self.n}, N={self.N})"
            raise IndexRangeError(msg) from exc

    def __contains__(self, state: object) -> bool:
        return state in self._positions

    def occupations(self) -> NDArray[np.int64]:
        """Tableau (dim, n) des nombres d'occupation."""
        return np.array(self.states, dtype=np.int64).reshape(len(self.states), self.n)

    def running_totals(self) -> NDArray[np.int64]:
        """Tableau (dim, n) des indices imbriqués j_k = Σ_{i≥k} m_i (j₀ = N)."""
        occupations = self.occupations()
        return np.cumsum(occupations[:, ::-1], axis=1)[:, ::-1]


@lru_cache(maxsize=64)
def basis(n: int, N: int) -> OccupationBasis:
    """Construit la base d'occupation (n, N).

    Raises:
        DimensionError: Si n < 1 ou N < 0.
    """
    if n < 1 or N < 0:
        msg = f"Base d'occupation invalide : n={n}, N={N} (n ≥ 1, N ≥ 0)"
        raise DimensionError(msg)
    return OccupationBasis(n=n, N=N, states=tuple(_nested(n, N)))
