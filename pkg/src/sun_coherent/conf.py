"""Configuration de sun-coherent via variables d'environnement.

FR: Helper pour accéder aux paramètres SUN_COHERENT_* définis dans
    l'environnement. Fournit des valeurs par défaut typées.
EN: Helper for accessing SUN_COHERENT_* settings from the environment,
    with typed defaults.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path

logger = logging.getLogger(__name__)

ENV_PREFIX = "SUN_COHERENT_"

DEFAULTS: dict[str, object] = {
    "OUTPUT_DIR": None,
    "RECONSTRUCTION_TOL": 1e-10,
    "ALGEBRA_TOL": 1e-12,
    "SEED": 0,
    "DRAWS": 20,
    "LOG_LEVEL": "WARNING",
}

# Conversion des valeurs lues dans l'environnement (toujours des chaînes)
_COERCE: dict[str, type] = {
    "RECONSTRUCTION_TOL": float,
    "ALGEBRA_TOL": float,
    "SEED": int,
    "DRAWS": int,
}


def get_setting(name: str) -> object:
    """Retourne la valeur d'un paramètre sun-coherent.

    FR: Cherche la variable d'environnement SUN_COHERENT_<name>, puis
        retombe sur les défauts.
    EN: Looks up the SUN_COHERENT_<name> environment variable, then falls
        back to defaults.

    Raises:
        KeyError: Si le paramètre est inconnu.
        ValueError: Si la valeur d'environnement n'est pas convertible.
    """
    if name not in DEFAULTS:
        msg = f"Paramètre sun-coherent inconnu : {name}"
        raise KeyError(msg)
    raw = os.environ.get(f"{ENV_PREFIX}{name}")
    if raw is None or raw == "":
        return DEFAULTS[name]
    caster = _COERCE.get(name)
    if caster is None:
        return raw
    try:
        return caster(raw)
    except ValueError as exc:
        msg = f"Valeur invalide pour {ENV_PREFIX}{name} : {raw!r}"
        raise ValueError(msg) from exc


def resolve_output_path(path: str | None) -> Path | None:
    """Résout un chemin de sortie relatif sous OUTPUT_DIR (si configuré).

    FR: Un chemin absolu est conservé tel quel ; None signifie stdout.
    EN: Absolute paths are kept; None means stdout.
    """
    if path is None:
        return None
    candidate = Path(path)
    output_dir = get_setting("OUTPUT_DIR")
    if candidate.is_absolute() or not output_dir:
        return candidate
    resolved = Path(str(output_dir)) / candidate
    logger.debug("Chemin de sortie résolu sous OUTPUT_DIR : %s", resolved)
    return resolved


def get_float_setting(name: str) -> float:
    """Paramètre réel (tolérances)."""
    value = get_setting(name)
    if not isinstance(value, int | float):
        msg = f"Paramètre {name} non numérique : {value!r}"
        raise TypeError(msg)
    return float(value)


def get_int_setting(name: str) -> int:
    """Paramètre entier (graine, nombre de tirages)."""
    value = get_setting(name)
    if not isinstance(value, int):
        msg = f"Paramètre {name} non entier : {value!r}"
        raise TypeError(msg)
    return value
