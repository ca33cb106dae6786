"""Hiérarchie d'exceptions de sun-coherent.

FR: Exceptions typées pour les dimensions et indices hors domaine, les
    matrices non hermitiennes ou non unitaires, les arbres de décomposition
    incohérents, les pôles des cartes et les échecs de vérification.
EN: Typed exceptions for out-of-range dimensions and indices, non-Hermitian
    or non-unitary matrices, malformed decomposition trees, chart poles and
    verification failures.
"""


class SUNError(Exception):
    """Erreur de base pour toutes les opérations sun-coherent.

    FR: Classe parente de toutes les exceptions du paquet.
    EN: Base class for all package exceptions.
    """


class DimensionError(SUNError):
    """Dimension de groupe ou taille de représentation invalide.

    FR: n trop petit, N négatif, tailles de matrices incompatibles.
    EN: n too small, negative N, mismatched matrix sizes.
    """


class IndexRangeError(SUNError):
    """Indice hors domaine (matrice élémentaire, opérateur d'échelle, Cartan).

    FR: Les indices sont 1-basés et doivent respecter 1 ≤ h, j ≤ n.
    EN: Indices are 1-based and must satisfy 1 ≤ h, j ≤ n.
    """


class NonHermitianError(SUNError):
    """Matrice non hermitienne là où une matrice hermitienne est exigée."""


class NonUnitaryError(SUNError):
    """Matrice non unitaire ou de déterminant différent de 1.

    FR: Levée par la décomposition L·M·R lorsque l'entrée n'est pas dans SU(n)
        à la tolérance demandée.
    EN: Raised by the L·M·R decomposition when the input is not in SU(n)
        within the requested tolerance.
    """


class MalformedTreeError(SUNError):
    """Arbre de décomposition incohérent (sous-arbres de tailles différentes)."""


class PoleError(SUNError):
    """Évaluation au pôle d'une carte (ξ = π/2, θ = π/2).

    FR: Les coordonnées stéréographiques et les paramètres de Gauss divergent
        lorsque l'angle polaire atteint π/2.
    EN: Stereographic coordinates and Gauss parameters diverge when the polar
        angle reaches π/2.
    """


class VerificationError(SUNError):
    """Au moins un invariant de la suite de vérification a échoué.

    FR: Contient la liste des invariants en échec avec l'écart mesuré.
    EN: Holds the list of failed invariants with their measured deviation.
    """

    def __init__(self, message: str, errors: list[str] | None = None) -> None:
        super().__init__(message)
        self.errors: list[str] = errors or []
