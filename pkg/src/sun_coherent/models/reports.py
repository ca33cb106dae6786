"""Rapports produits par les vérifications et la CLI.

FR: Modèles Pydantic sérialisables en JSON : résultat d'un invariant,
    rapport de suite, contrôle de résolution de l'unité, volume, recouvrement.
EN: JSON-serializable Pydantic models for check results and reports.
"""

from pydantic import BaseModel, Field, computed_field

from sun_coherent.models.enums import SuiteModule


class CheckResult(BaseModel):
    """Résultat d'un invariant : écart maximal mesuré contre la tolérance."""

    name: str = Field(..., description="Nom de l'invariant / Invariant name")
    module: SuiteModule = Field(..., description="Module d'origine / Source module")
    deviation: float = Field(..., ge=0, description="Écart maximal mesuré / Max deviation")
    tolerance: float = Field(..., gt=0, description="Tolérance / Tolerance")
    detail: str | None = Field(default=None, description="Contexte (n, N, tirages)")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """Vrai si l'écart reste sous la tolérance."""
        return self.deviation <= self.tolerance


class VerificationReport(BaseModel):
    """Rapport complet de la suite d'invariants.

    FR: Liste ordonnée des invariants ; l'ordre est déterministe pour une
        configuration et une graine données.
    EN: Ordered list of invariants; deterministic for a given config and seed.
    """

    n: int
    N: int
    seed: int
    draws: int
    checks: list[CheckResult] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[CheckResult]:
        """Invariants en échec."""
        return [check for check in self.checks if not check.passed]


class UnityCheck(BaseModel):
    """Contrôle numérique de la résolution de l'unité."""

    n: int
    N: int
    dim: int = Field(..., description="Dimension C(N+n-1, n-1)")
    prefactor: float = Field(..., description="(N+n-1)! / (2π^n N!)")
    max_abs_deviation: float = Field(..., ge=0, description="max |M - I|")
    polar_order: int
    phase_order: int
    exact_grid: bool = Field(..., description="Grille au-dessus des seuils d'exactitude")


class VolumeReport(BaseModel):
    """Volume de l'espace quotient par quadrature et forme close."""

    n: int
    volume: float
    exact: float
    delta: float
    polar_order: int
    phase_order: int


class OverlapReport(BaseModel):
    """Recouvrement de deux états : forme close contre produit scalaire direct.

    FR: Les complexes sont sérialisés en paires [re, im].
    EN: Complex numbers are serialized as [re, im] pairs.
    """

    n: int
    N: int
    closed_form: tuple[float, float]
    direct: tuple[float, float]
    delta: float
