"""Coordonnées angulaires de l'espace quotient SU(n)/SU(n-1).

FR: Les 2n-1 coordonnées sphériques (ξ₀…ξ_{n-2}, φ₀…φ_{n-1}) d'un état
    cohérent, et les paramètres (α, β, γ) de la forme en matrices λ.
EN: The 2n-1 spherical coordinates of a coherent state, and the (α, β, γ)
    parameters of the λ-matrix form.
"""

from __future__ import annotations

import math
from typing import Literal

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi

# Écart toléré hors de [0, π/2] avant rejet (bruit d'arrondi)
_POLAR_SLACK = 1e-12


def wrap_phase(value: float) -> float:
    """Ramène une phase dans [0, 2π).

    FR: Une valeur qui s'arrondit à 2π après réduction est ramenée à 0.
    EN: A value rounding up to 2π after reduction maps to 0.

    Raises:
        ValueError: Si la phase n'est pas un nombre fini.
    """
    if not math.isfinite(value):
        msg = f"Phase non finie : {value!r}"
        raise ValueError(msg)
    wrapped = math.fmod(value, TWO_PI)
    if wrapped < 0.0:
        wrapped += TWO_PI
    if wrapped >= TWO_PI:
        wrapped = 0.0
    return wrapped


def clamp_polar(value: float) -> float:
    """Valide un angle polaire dans [0, π/2] (avec tolérance d'arrondi).

    Raises:
        ValueError: Si l'angle n'est pas fini ou sort de [0, π/2] au-delà de
            la tolérance.
    """
    if not math.isfinite(value):
        msg = f"Angle polaire non fini : {value!r}"
        raise ValueError(msg)
    if value < -_POLAR_SLACK or value > HALF_PI + _POLAR_SLACK:
        msg = f"Angle polaire hors de [0, π/2] : {value!r}"
        raise ValueError(msg)
    return min(max(value, 0.0), HALF_PI)


class AngleCoordinates(BaseModel):
    """Coordonnées d'un point de l'espace quotient / d'un état cohérent.

    FR: ξ contient les n-1 angles polaires, φ les n phases. Les phases sont
        normalisées dans [0, 2π) à la construction.
    EN: ξ holds the n-1 polar angles, φ the n phases. Phases are normalized
        into [0, 2π) on construction.
    """

    model_config = ConfigDict(frozen=True)

    xi: list[float] = Field(
        default_factory=list,
        description="Angles polaires ξ₀…ξ_{n-2} dans [0, π/2] / Polar angles",
    )
    phi: list[float] = Field(
        ...,
        min_length=1,
        description="Phases φ₀…φ_{n-1} dans [0, 2π) / Phases",
    )

    @field_validator("xi")
    @classmethod
    def _check_polar(cls, values: list[float]) -> list[float]:
        return [clamp_polar(float(v)) for v in values]

    @field_validator("phi")
    @classmethod
    def _wrap_phases(cls, values: list[float]) -> list[float]:
        return [wrap_phase(float(v)) for v in values]

    @model_validator(mode="after")
    def _check_lengths(self) -> AngleCoordinates:
        if len(self.xi) != len(self.phi) - 1:
            msg = (
                f"Longueurs incohérentes : {len(self.xi)} angles polaires pour "
                f"{len(self.phi)} phases (attendu {len(self.phi) - 1})"
            )
            raise ValueError(msg)
        return self

    @property
    def n(self) -> int:
        """Dimension du groupe SU(n)."""
        return len(self.phi)

    def xi_array(self) -> NDArray[np.float64]:
        """Angles polaires sous forme de tableau numpy."""
        return np.asarray(self.xi, dtype=np.float64)

    def phi_array(self) -> NDArray[np.float64]:
        """Phases sous forme de tableau numpy."""
        return np.asarray(self.phi, dtype=np.float64)

    @classmethod
    def origin(cls, n: int) -> AngleCoordinates:
        """Point de plus haut poids (tous les angles nuls)."""
        return cls(xi=[0.0] * (n - 1), phi=[0.0] * n)


class DisplacementParameters(BaseModel):
    """Paramètres de la forme en matrices λ de l'opérateur de déplacement.

    FR: Pour SU(3) : (α, β, γ) paramètrent le facteur gauche et (θ, φ) le
        facteur central, avec φ₁ = α+γ, φ₂ = -α+γ, ξ₁ = -β. Pour SU(4), le
        niveau intermédiaire ajoute (ξ₁, φ₁) et (α, β, γ) donnent
        φ₂ = α+γ, φ₃ = -α+γ, ξ₂ = -β.
    EN: For SU(3), (α, β, γ) parameterize the left factor and (θ, φ) the
        middle one. For SU(4) the intermediate level adds (ξ₁, φ₁).
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    n: Literal[3, 4] = Field(..., description="Dimension du groupe / Group dimension")
    alpha: float = Field(default=0.0, description="α")
    beta: float = Field(default=0.0, description="β (= -ξ du dernier niveau)")
    gamma: float = Field(default=0.0, description="γ")
    theta: float = Field(default=0.0, description="θ du facteur central / middle polar angle")
    phi: float = Field(default=0.0, description="φ du facteur central / middle phase")
    xi1: float | None = Field(default=None, description="ξ₁ (SU(4) uniquement)")
    phi1: float | None = Field(default=None, description="φ₁ (SU(4) uniquement)")

    @model_validator(mode="after")
    def _check_levels(self) -> DisplacementParameters:
        has_middle = self.xi1 is not None and self.phi1 is not None
        if self.n == 4 and not has_middle:
            msg = "SU(4) exige xi1 et phi1"
            raise ValueError(msg)
        if self.n == 3 and (self.xi1 is not None or self.phi1 is not None):
            msg = "xi1/phi1 ne s'appliquent qu'à SU(4)"
            raise ValueError(msg)
        return self

    def middle_level(self) -> tuple[float, float]:
        """(ξ₁, φ₁) du niveau intermédiaire de SU(4).

        Raises:
            ValueError: Si les paramètres ne portent pas de niveau intermédiaire.
        """
        if self.xi1 is None or self.phi1 is None:
            msg = f"Pas de niveau intermédiaire pour SU({self.n})"
            raise ValueError(msg)
        return self.xi1, self.phi1

    def to_angles(self) -> AngleCoordinates:
        """Coordonnées angulaires correspondant à ces paramètres."""
        last_phases = [self.alpha + self.gamma, -self.alpha + self.gamma]
        if self.n == 3:
            return AngleCoordinates(
                xi=[self.theta, -self.beta],
                phi=[self.phi, *last_phases],
            )
        xi1, phi1 = self.middle_level()
        return AngleCoordinates(
            xi=[self.theta, xi1, -self.beta],
            phi=[self.phi, phi1, *last_phases],
        )

    @classmethod
    def from_angles(cls, angles: AngleCoordinates) -> DisplacementParameters:
        """Inverse de to_angles (à une redéfinition de phase près)."""
        if angles.n not in (3, 4):
            msg = f"Forme λ disponible pour n ∈ {{3, 4}} uniquement (n={angles.n})"
            raise ValueError(msg)
        phi_a, phi_b = angles.phi[-2], angles.phi[-1]
        common = {
            "alpha": 0.5 * (phi_a - phi_b),
            "beta": -angles.xi[-1],
            "gamma": 0.5 * (phi_a + phi_b),
            "theta": angles.xi[0],
            "phi": angles.phi[0],
        }
        if angles.n == 3:
            return cls(n=3, **common)
        return cls(n=4, xi1=angles.xi[1], phi1=angles.phi[1], **common)
