"""Représentation fondamentale : paramétrisation, décomposition, états, géométrie.

FR: Construction L·M·R des éléments de SU(n) et sa décomposition inverse,
    états cohérents de ℂⁿ, métrique et mesure de l'espace quotient,
    décomposition de Gauss de SU(2) et déplacements en matrices λ.
EN: L·M·R construction and decomposition, fundamental coherent states,
    coset metric and measure, SU(2) Gauss decomposition, λ displacements.
"""

from sun_coherent.fundamental.decomposition import decompose, givens_chain
from sun_coherent.fundamental.displacement import (
    DisplacementFactor,
    displacement_factors,
    displacement_lambda,
)
from sun_coherent.fundamental.gauss import (
    GaussParameters,
    gauss_decomposition_su2,
    gauss_product,
    gauss_reconstruction_deviation,
)
from sun_coherent.fundamental.geometry import (
    coordinate_vector,
    embedding_slope,
    measure_density,
    measure_density_array,
    metric_diag,
    metric_quadratic_form,
)
from sun_coherent.fundamental.parameterization import (
    angles_to_tree,
    build_group_element,
    embed_block,
    middle_matrix,
    su2_matrix,
    tree_to_angles,
    unitarity_deviation,
)
from sun_coherent.fundamental.sampling import haar_random_su, random_angles
from sun_coherent.fundamental.states import (
    FundamentalState,
    bloch_vector,
    coherent_state_fund,
    fundamental_amplitudes,
    half_angle,
    phase_fixed_state,
    polar_angle,
)

__all__ = [
    "DisplacementFactor",
    "FundamentalState",
    "GaussParameters",
    "angles_to_tree",
    "bloch_vector",
    "build_group_element",
    "coherent_state_fund",
    "coordinate_vector",
    "decompose",
    "displacement_factors",
    "displacement_lambda",
    "embed_block",
    "embedding_slope",
    "fundamental_amplitudes",
    "gauss_decomposition_su2",
    "gauss_product",
    "gauss_reconstruction_deviation",
    "givens_chain",
    "haar_random_su",
    "half_angle",
    "measure_density",
    "measure_density_array",
    "metric_diag",
    "metric_quadratic_form",
    "middle_matrix",
    "phase_fixed_state",
    "polar_angle",
    "random_angles",
    "su2_matrix",
    "tree_to_angles",
    "unitarity_deviation",
]
