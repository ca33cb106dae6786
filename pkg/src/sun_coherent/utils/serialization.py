"""Sérialisation JSON/CSV des entrées et des rapports.

FR: Les complexes sont écrits en paires [re, im] ; les matrices en
    tableaux ligne par ligne de paires. Une source « - » lit l'entrée
    standard, une source commençant par « { » ou « [ » est du JSON en ligne,
    sinon c'est un chemin de fichier.
EN: Complex numbers as [re, im] pairs, matrices as row-major arrays of
    pairs. Source "-" reads stdin, inline JSON is accepted, otherwise a path.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import sys
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from sun_coherent.errors import DimensionError
from sun_coherent.models.angles import AngleCoordinates

logger = logging.getLogger(__name__)

STDIN_SOURCE = "-"


def complex_pair(value: complex) -> list[float]:
    """[re, im] d'un complexe."""
    z = complex(value)
    return [z.real, z.imag]


def encode_vector(values: ArrayLike) -> list[list[float]]:
    return [complex_pair(z) for z in np.asarray(values).ravel()]


def encode_matrix(matrix: ArrayLike) -> list[list[list[float]]]:
    """Matrice ligne par ligne de paires [re, im]."""
    return [encode_vector(row) for row in np.atleast_2d(np.asarray(matrix))]


def decode_matrix(data: Any) -> NDArray[np.complex128]:
    """Inverse d'encode_matrix.

    Raises:
        DimensionError: Si le tableau n'est pas une matrice carrée de paires.
    """
    try:
        array = np.asarray(data, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        msg = "Matrice JSON invalide : tableau de paires [re, im] attendu"
        raise DimensionError(msg) from exc
    if array.ndim != 3 or array.shape[2] != 2 or array.shape[0] != array.shape[1]:
        msg = f"Matrice JSON carrée de paires [re, im] attendue, forme reçue {array.shape}"
        raise DimensionError(msg)
    return (array[..., 0] + 1j * array[..., 1]).astype(np.complex128)


def read_json_source(source: str) -> Any:
    """Lit du JSON depuis stdin (« - »), en ligne, ou depuis un fichier.

    Raises:
        OSError: Si le fichier est illisible.
        json.JSONDecodeError: Si le contenu n'est pas du JSON.
    """
    stripped = source.strip()
    if stripped == STDIN_SOURCE:
        text = sys.stdin.read()
    elif stripped.startswith(("{", "[")):
        text = stripped
    else:
        text = Path(stripped).read_text(encoding="utf-8")
        logger.debug("Entrée lue depuis %s", stripped)
    return json.loads(text)


def load_angles(source: str) -> AngleCoordinates:
    """Coordonnées {xi: [...], phi: [...]} depuis une source JSON."""
    return AngleCoordinates.model_validate(read_json_source(source))


def load_matrix(source: str) -> NDArray[np.complex128]:
    return decode_matrix(read_json_source(source))


def dumps(payload: Any) -> str:
    """JSON canonique : clés triées, indentation fixe.

    Raises:
        ValueError: Si le rapport contient NaN ou un infini.
    """
    text = json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False)
    return text + "\n"


def to_csv(rows: Sequence[Mapping[str, Any]]) -> str:
    """Table plate en CSV ; colonnes dans l'ordre de la première ligne."""
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def write_output(text: str, path: Path | None) -> None:
    """Écrit sur stdout (path None) ou dans un fichier."""
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("Rapport écrit dans %s", path)
