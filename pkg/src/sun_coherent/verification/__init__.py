"""Suite d'invariants : point d'entrée de la commande `verify`.

FR: run_suite() agrège les contrôles de chaque module dans un rapport,
    require_all() lève VerificationError si l'un d'eux échoue.
EN: run_suite() aggregates per-module checks; require_all() raises on
    failure.
"""

from sun_coherent.verification.suite import SuiteTolerances, require_all, run_suite

__all__ = ["SuiteTolerances", "require_all", "run_suite"]
