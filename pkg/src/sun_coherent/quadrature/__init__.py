"""Quadrature exacte sur l'espace quotient : volume et résolution de l'unité."""

from sun_coherent.quadrature.grid import (
    QuadratureGrid,
    build_grid,
    default_grid,
    phase_rule,
    polar_rule,
)
from sun_coherent.quadrature.integrals import (
    coset_volume,
    offdiagonal_max,
    phase_moment,
    resolution_of_unity,
    unity_check,
    unity_prefactor,
    unity_refinement_gap,
    volume_exact,
    volume_report,
    xi_moment,
    xi_moment_exact,
)

__all__ = [
    "QuadratureGrid",
    "build_grid",
    "coset_volume",
    "default_grid",
    "offdiagonal_max",
    "phase_moment",
    "phase_rule",
    "polar_rule",
    "resolution_of_unity",
    "unity_check",
    "unity_prefactor",
    "unity_refinement_gap",
    "volume_exact",
    "volume_report",
    "xi_moment",
    "xi_moment_exact",
]
