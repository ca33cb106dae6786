"""Énumérations de sun-coherent.

FR: Étiquettes des générateurs, conventions d'angles, commandes et formats
    de sortie.
EN: Generator labels, angle conventions, commands and output formats.
"""

from enum import StrEnum


class GeneratorKind(StrEnum):
    """Famille d'un générateur λ.

    FR: Les générateurs non diagonaux sont symétriques (Θ) ou
        antisymétriques (β) ; les diagonaux sont les η^m_m.
    EN: Off-diagonal generators are symmetric (Θ) or antisymmetric (β);
        diagonal ones are the η^m_m.
    """

    THETA = "Theta"
    """Θ^h_j = e^h_j + e^j_h"""

    BETA = "beta"
    """β^h_j = -i (e^h_j - e^j_h)"""

    ETA = "eta"
    """η^m_m, combinaison diagonale normalisée / normalized diagonal combination"""


class PrimedLambda(StrEnum):
    """Combinaisons diagonales « primées ».

    FR: λ₈′ place σ₃ dans le bloc (2,3), λ₁₅′ dans le bloc (3,4).
    EN: λ₈′ embeds σ₃ in block (2,3), λ₁₅′ in block (3,4).
    """

    LAMBDA8 = "lambda8'"
    LAMBDA15 = "lambda15'"


class AngleConvention(StrEnum):
    """Convention de l'angle polaire de SU(2).

    FR: PARAMETER garde θ de la matrice g(θ, φ₁, φ₂) ; HALF_ANGLE utilise
        θ′ = 2θ (forme à phase fixée sur la 2-sphère).
    EN: PARAMETER keeps θ of g(θ, φ₁, φ₂); HALF_ANGLE uses θ′ = 2θ
        (phase-fixed form on the 2-sphere).
    """

    PARAMETER = "parameter"
    HALF_ANGLE = "half-angle"


class Command(StrEnum):
    """Commandes de la CLI."""

    STATE = "state"
    DECOMPOSE = "decompose"
    OVERLAP = "overlap"
    VOLUME = "volume"
    UNITY_CHECK = "unity-check"
    GENERATORS = "generators"
    VERIFY = "verify"


class OutputFormat(StrEnum):
    """Format de sortie des rapports.

    FR: JSON est le format canonique ; CSV uniquement pour les tables plates.
    EN: JSON is canonical; CSV only for flat tables.
    """

    JSON = "json"
    CSV = "csv"


class SuiteModule(StrEnum):
    """Module d'origine d'un invariant vérifié."""

    GENERATORS = "generators"
    FUNDAMENTAL = "fundamental"
    SYMREP = "symrep"
    QUADRATURE = "quadrature"
