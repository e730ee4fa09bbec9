"""Numerical verification of curvature identities for submanifolds of generalized Sasakian-space-forms."""
from .connections import ConnectionKind, compare_curvature
from .contact_geometry import AlmostContactStructure, SpaceFormParams, canonical_structure, sasakian_params, validate
from .frame_algebra import Sampler
from .invariants import FormVariant, ricci_closed, ricci_direct, scalar_closed, scalar_direct

__version__ = "0.1.0"

__all__ = [
    "AlmostContactStructure",
    "ConnectionKind",
    "FormVariant",
    "Sampler",
    "SpaceFormParams",
    "canonical_structure",
    "compare_curvature",
    "ricci_closed",
    "ricci_direct",
    "sasakian_params",
    "scalar_closed",
    "scalar_direct",
    "validate",
]
