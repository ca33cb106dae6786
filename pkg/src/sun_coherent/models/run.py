"""Configuration résolue d'une commande de la CLI."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sun_coherent.models.enums import Command, OutputFormat

# Paramètres obligatoires par commande
_REQUIRED: dict[Command, tuple[str, ...]] = {
    Command.STATE: ("n", "angles"),
    Command.DECOMPOSE: ("matrix",),
    Command.OVERLAP: ("n", "angles", "angles_b"),
    Command.VOLUME: ("n",),
    Command.UNITY_CHECK: ("n",),
    Command.GENERATORS: ("n",),
    Command.VERIFY: ("n",),
}

# Rapports imbriqués : pas de rendu CSV
_JSON_ONLY = {Command.DECOMPOSE}


class RunConfig(BaseModel):
    """Paramètres d'une exécution de la CLI.

    FR: Les tolérances doivent être strictement positives ; la graine et le
        nombre de tirages retombent sur les paramètres SEED et DRAWS.
    EN: Tolerances must be positive; seed and draws default to the SEED and
        DRAWS settings.
    """

    model_config = ConfigDict(frozen=True)

    command: Command = Field(..., description="Commande / Command")
    n: int | None = Field(default=None, ge=1, description="Dimension du groupe SU(n)")
    N: int = Field(default=1, ge=0, description="Taille de la représentation symétrique")
    angles: str | None = Field(default=None, description="Angles (fichier, JSON ou « - »)")
    angles_b: str | None = Field(default=None, description="Second jeu d'angles (overlap)")
    matrix: str | None = Field(default=None, description="Matrice JSON (fichier ou « - »)")
    phase_fixed: bool = Field(default=False, description="Forme à phase fixée")
    polar_order: int | None = Field(default=None, ge=1, description="Ordre polaire P")
    phase_order: int | None = Field(default=None, ge=1, description="Ordre de phase Q")
    output: str | None = Field(default=None, description="Fichier de sortie (stdout si absent)")
    format: OutputFormat = Field(default=OutputFormat.JSON, description="Format de sortie")
    seed: int | None = Field(default=None, description="Graine des tirages aléatoires")
    draws: int | None = Field(default=None, ge=1, description="Tirages par invariant")
    decompose_tol: float = Field(default=1e-8, gt=0, description="Tolérance SU(n) de decompose")
    reconstruction_tol: float | None = Field(
        default=None, gt=0, description="Tolérance de reconstruction"
    )
    algebra_tol: float | None = Field(default=None, gt=0, description="Tolérance algébrique")

    @model_validator(mode="after")
    def _check_command(self) -> RunConfig:
        missing = [name for name in _REQUIRED[self.command] if getattr(self, name) is None]
        if missing:
            msg = (
                f"Commande {self.command.value} : "
                f"paramètre(s) manquant(s) {', '.join(missing)}"
            )
            raise ValueError(msg)
        if self.command in _JSON_ONLY and self.format is OutputFormat.CSV:
            msg = f"Commande {self.command.value} : sortie JSON uniquement"
            raise ValueError(msg)
        if self.command is Command.VERIFY and self.n is not None and self.n < 2:
            msg = f"verify exige n ≥ 2 (reçu n={self.n})"
            raise ValueError(msg)
        return self
