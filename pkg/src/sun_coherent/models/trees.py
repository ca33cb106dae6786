"""Arbres de décomposition L·M·R des éléments de SU(n).

FR: Un élément de SU(n) s'écrit L_{n-1} M(θ, φ) R_{n-1}, où L et R portent
    des éléments de SU(n-1). L'arbre enregistre récursivement (θ, φ) et les
    sous-arbres gauche/droit ; la récursion s'arrête à SU(2), représenté
    par le triplet (θ, φ₁, φ₂).
EN: An SU(n) element is L_{n-1} M(θ, φ) R_{n-1}. The tree records (θ, φ)
    and the left/right subtrees recursively, down to SU(2) triples.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from sun_coherent.models.angles import clamp_polar, wrap_phase


class SU2Angles(BaseModel):
    """Triplet (θ, φ₁, φ₂) d'un élément de SU(2).

    FR: g = [[e^{iφ₁} cos θ, -e^{-iφ₂} sin θ], [e^{iφ₂} sin θ, e^{-iφ₁} cos θ]].
    EN: Base case of the decomposition tree.
    """

    model_config = ConfigDict(frozen=True)

    theta: float = Field(default=0.0, description="Angle polaire θ ∈ [0, π/2]")
    phi1: float = Field(default=0.0, description="Phase φ₁ ∈ [0, 2π)")
    phi2: float = Field(default=0.0, description="Phase φ₂ ∈ [0, 2π)")

    @field_validator("theta")
    @classmethod
    def _check_theta(cls, value: float) -> float:
        return clamp_polar(value)

    @field_validator("phi1", "phi2")
    @classmethod
    def _wrap(cls, value: float) -> float:
        return wrap_phase(value)

    @property
    def n(self) -> int:
        return 2


class DecompositionTree(BaseModel):
    """Nœud (θ, φ, gauche, droite) de la factorisation L·M·R.

    FR: `left` paramètre X_{n-1}, `right` paramètre Y_{n-1}. Les deux
        sous-arbres doivent décrire le même SU(n-1).
    EN: `left` parameterizes X_{n-1}, `right` parameterizes Y_{n-1}.
    """

    model_config = ConfigDict(frozen=True)

    theta: float = Field(default=0.0, description="Angle polaire de M / polar angle of M")
    phi: float = Field(default=0.0, description="Phase de M / phase of M")
    left: DecompositionTree | SU2Angles = Field(..., description="Facteur X_{n-1}")
    right: DecompositionTree | SU2Angles = Field(..., description="Facteur Y_{n-1}")

    @field_validator("theta")
    @classmethod
    def _check_theta(cls, value: float) -> float:
        return clamp_polar(value)

    @field_validator("phi")
    @classmethod
    def _wrap(cls, value: float) -> float:
        return wrap_phase(value)

    @model_validator(mode="after")
    def _check_sizes(self) -> DecompositionTree:
        if self.left.n != self.right.n:
            msg = (
                f"Sous-arbres incohérents : gauche SU({self.left.n}), "
                f"droite SU({self.right.n})"
            )
            raise ValueError(msg)
        return self

    @property
    def n(self) -> int:
        """Dimension du groupe décrit par ce nœud."""
        return self.left.n + 1

    @classmethod
    def identity(cls, n: int) -> DecompositionTree | SU2Angles:
        """Arbre à angles nuls de SU(n) (élément neutre)."""
        if n == 2:
            return SU2Angles()
        child = cls.identity(n - 1)
        return cls(left=child, right=child)


GroupAngles = DecompositionTree | SU2Angles
"""Arbre complet d'un élément de SU(n), n ≥ 2."""

DecompositionTree.model_rebuild()
