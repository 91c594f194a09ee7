"""
Domain models: structural types, the concrete Rikitake objects and symmetry candidates.
"""

from app.api.models.base import JetSystem, PoissonTensor, PolyMap, VectorField
from app.api.models.candidates import NewtonCandidate, PointSymmetryCandidate
from app.api.models.rikitake import (
    CANONICAL_RING,
    EXTENDED_CANONICAL_RING,
    EXTENDED_STATE_RING,
    JET_RING,
    NEWTON_RING,
    STATE_RING,
    CanonicalSystem,
    InvariantFunctions,
    PoissonTensors,
    canonical_system,
    catalog,
    invariant_functions,
    lagrangian_system,
    named_fields,
    phi_map,
    phi_section,
    poisson_tensors,
    rikitake_field,
)

__all__ = [
    "CANONICAL_RING",
    "EXTENDED_CANONICAL_RING",
    "EXTENDED_STATE_RING",
    "JET_RING",
    "NEWTON_RING",
    "STATE_RING",
    "CanonicalSystem",
    "InvariantFunctions",
    "JetSystem",
    "NewtonCandidate",
    "PointSymmetryCandidate",
    "PoissonTensor",
    "PoissonTensors",
    "PolyMap",
    "VectorField",
    "canonical_system",
    "catalog",
    "invariant_functions",
    "lagrangian_system",
    "named_fields",
    "phi_map",
    "phi_section",
    "poisson_tensors",
    "rikitake_field",
]
