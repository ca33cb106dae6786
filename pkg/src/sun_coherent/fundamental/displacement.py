"""Opérateur de déplacement écrit en exponentielles de matrices λ (SU(3), SU(4)).

FR: SU(3) : e^{iαλ₈′} e^{iβλ₇} e^{iγλ₈′} e^{iφλ₃/2} e^{-iθλ₂} e^{iφλ₃/2}.
    SU(4) : e^{iαλ₁₅′} e^{iβλ₁₄} e^{iγλ₁₅′} e^{iφ₁λ₈′/2} e^{-iξ₁λ₇}
    e^{iφ₁λ₈′/2} e^{iφλ₃/2} e^{-iθλ₂} e^{iφλ₃/2}. La forme développée
    remplace les λ primées par les λ₃, λ₈, λ₁₅ d'origine.
EN: Products of Hermitian exponentials; the expanded form rewrites the
    primed generators in terms of λ₃, λ₈, λ₁₅.
"""

from __future__ import annotations

import logging
import math
from functools import reduce
from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray

from sun_coherent.errors import DimensionError
from sun_coherent.generators.algebra import herm_exp
from sun_coherent.generators.lambdas import lambda_set, primed_lambda
from sun_coherent.models.angles import DisplacementParameters
from sun_coherent.models.enums import PrimedLambda

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]

# λ′ = Σ coefficient · λ_index
_PRIMED_EXPANSION: dict[PrimedLambda, tuple[tuple[int, float], ...]] = {
    PrimedLambda.LAMBDA8: ((8, math.sqrt(3.0) / 2.0), (3, -0.5)),
    PrimedLambda.LAMBDA15: ((15, math.sqrt(6.0) / 3.0), (8, -math.sqrt(3.0) / 3.0)),
}


class DisplacementFactor(NamedTuple):
    """Facteur exp(i · parameter · generator) du produit."""

    label: str
    generator: ComplexMatrix
    parameter: float


def _plain(n: int, index: int, parameter: float) -> DisplacementFactor:
    return DisplacementFactor(f"lambda{index}", lambda_set(n).lam(index), parameter)


def _primed(
    n: int, which: PrimedLambda, parameter: float, expanded: bool
) -> list[DisplacementFactor]:
    if not expanded:
        return [DisplacementFactor(which.value, primed_lambda(n, which), parameter)]
    # Générateurs diagonaux : les exponentielles commutent
    return [
        _plain(n, index, coefficient * parameter)
        for index, coefficient in _PRIMED_EXPANSION[which]
    ]


def displacement_factors(
    params: DisplacementParameters, expanded: bool = False
) -> list[DisplacementFactor]:
    """Liste ordonnée des facteurs (générateur, paramètre) du déplacement."""
    n = params.n
    if n not in (3, 4):
        msg = f"Forme λ disponible pour n ∈ {{3, 4}} uniquement (n={n})"
        raise DimensionError(msg)
    last = PrimedLambda.LAMBDA8 if n == 3 else PrimedLambda.LAMBDA15
    twist_index = 7 if n == 3 else 14

    factors: list[DisplacementFactor] = []
    factors += _primed(n, last, params.alpha, expanded)
    factors.append(_plain(n, twist_index, params.beta))
    factors += _primed(n, last, params.gamma, expanded)
    if n == 4:
        xi1, phi1 = params.middle_level()
        factors += _primed(n, PrimedLambda.LAMBDA8, phi1 / 2.0, expanded)
        factors.append(_plain(n, 7, -xi1))
        factors += _primed(n, PrimedLambda.LAMBDA8, phi1 / 2.0, expanded)
    factors += [
        _plain(n, 3, params.phi / 2.0),
        _plain(n, 2, -params.theta),
        _plain(n, 3, params.phi / 2.0),
    ]
    return factors


def displacement_lambda(
    params: DisplacementParameters, expanded: bool = False
) -> ComplexMatrix:
    """Produit ordonné des exponentielles hermitiennes (élément de SU(n))."""
    factors = displacement_factors(params, expanded=expanded)
    logger.debug("Déplacement SU(%d) : %d facteurs", params.n, len(factors))
    result: ComplexMatrix = reduce(
        np.matmul,
        (herm_exp(factor.generator, factor.parameter) for factor in factors),
        np.eye(params.n, dtype=np.complex128),
    )
    return result
