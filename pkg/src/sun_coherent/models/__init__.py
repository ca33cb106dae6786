"""Modèles de données Pydantic de sun-coherent."""

from sun_coherent.models.angles import AngleCoordinates, DisplacementParameters
from sun_coherent.models.reports import (
    CheckResult,
    OverlapReport,
    UnityCheck,
    VerificationReport,
    VolumeReport,
)
from sun_coherent.models.run import RunConfig
from sun_coherent.models.trees import DecompositionTree, GroupAngles, SU2Angles

__all__ = [
    "AngleCoordinates",
    "CheckResult",
    "DecompositionTree",
    "DisplacementParameters",
    "GroupAngles",
    "OverlapReport",
    "RunConfig",
    "SU2Angles",
    "UnityCheck",
    "VerificationReport",
    "VolumeReport",
]
