"""Représentation symétrique T^N_n : base d'occupation, opérateurs, états.

FR: Base |m₁…m_n⟩, opérateurs d'échelle et de Cartan creux, relèvement des
    générateurs, états cohérents imbriqués et leurs oracles, forme
    stéréographique et recouvrement.
EN: Occupation basis, sparse ladder and Cartan operators, generator lift,
    nested coherent states with oracles, stereographic form and overlap.
"""

from sun_coherent.symrep.basis import OccupationBasis, OccupationVector, basis, basis_size
from sun_coherent.symrep.operators import (
    SparseOperator,
    cartan_op,
    ladder_op,
    lift_generator,
    lift_unitary,
    lowering_op,
    number_op,
    raising_op,
)
from sun_coherent.symrep.states import (
    RepCoherentState,
    StereoCoordinates,
    angles_to_stereo,
    coherent_amplitudes,
    coherent_state,
    direct_overlap,
    eta_coeff,
    overlap_closed,
    stereo_to_angles,
    stereographic_state,
    tensor_power_oracle,
)

__all__ = [
    "OccupationBasis",
    "OccupationVector",
    "RepCoherentState",
    "SparseOperator",
    "StereoCoordinates",
    "angles_to_stereo",
    "basis",
    "basis_size",
    "cartan_op",
    "coherent_amplitudes",
    "coherent_state",
    "direct_overlap",
    "eta_coeff",
    "ladder_op",
    "lift_generator",
    "lift_unitary",
    "lowering_op",
    "number_op",
    "overlap_closed",
    "raising_op",
    "stereo_to_angles",
    "stereographic_state",
    "tensor_power_oracle",
]
