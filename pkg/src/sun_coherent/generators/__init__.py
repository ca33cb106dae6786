"""Générateurs de SU(n) : matrices élémentaires, base λ, algèbre.

FR: Construction de la base hermitienne Θ/β/η numérotée par blocs, des
    combinaisons primées, et des exponentielles hermitiennes.
EN: Block-numbered Θ/β/η Hermitian basis, primed combinations and
    Hermitian exponentials.
"""

from sun_coherent.generators.algebra import (
    CommutatorDeviation,
    commutator,
    herm_exp,
    hermiticity_deviation,
    theta_symbol,
    trace_orthonormality_deviation,
    verify_beta_theta_commutators,
)
from sun_coherent.generators.elementary import ElementaryIndex, elementary, elementary_matrix
from sun_coherent.generators.lambdas import (
    GeneratorLabel,
    GeneratorSet,
    beta,
    eta,
    lambda_index,
    lambda_set,
    primed_lambda,
    theta,
)

__all__ = [
    "CommutatorDeviation",
    "ElementaryIndex",
    "GeneratorLabel",
    "GeneratorSet",
    "beta",
    "commutator",
    "elementary",
    "elementary_matrix",
    "eta",
    "herm_exp",
    "hermiticity_deviation",
    "lambda_index",
    "lambda_set",
    "primed_lambda",
    "theta",
    "theta_symbol",
    "trace_orthonormality_deviation",
    "verify_beta_theta_commutators",
]
