"""Configuration pytest et fixtures partagées."""

import os
from collections.abc import Callable, Iterator

import numpy as np
import pytest

from sun_coherent.conf import ENV_PREFIX
from sun_coherent.fundamental import haar_random_su, random_angles
from sun_coherent.models.angles import AngleCoordinates

SEED = 20240917


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Retire les variables SUN_COHERENT_* de l'environnement de test."""
    for key in list(os.environ):
        if key.startswith(ENV_PREFIX):
            monkeypatch.delenv(key)
    yield


@pytest.fixture
def rng() -> np.random.Generator:
    """Générateur numpy à graine fixe."""
    return np.random.default_rng(SEED)


@pytest.fixture
def angle_factory(rng: np.random.Generator) -> Callable[..., AngleCoordinates]:
    """Tirage d'angles aléatoires : angle_factory(n, margin=0.0)."""

    def factory(n: int, margin: float = 0.0) -> AngleCoordinates:
        return random_angles(n, rng, margin=margin)

    return factory


@pytest.fixture
def haar_factory(rng: np.random.Generator) -> Callable[[int], np.ndarray]:
    """Tirage d'éléments de SU(n) selon la mesure de Haar."""

    def factory(n: int) -> np.ndarray:
        return haar_random_su(n, rng)

    return factory
