"""Exact Pin(2)-equivariant KO-theory and intersection-form obstructions."""
from .config import EngineConfig
from .kappa import HalfInt, ModelSpace, SpectrumClass, kappa_o_i, kappa_table
from .rep_ring import RepRingElem, from_generators, phi0, psi3, theta3

__version__ = "0.1.0"

__all__ = [
    "EngineConfig", "HalfInt", "ModelSpace", "SpectrumClass", "kappa_o_i", "kappa_table",
    "RepRingElem", "from_generators", "phi0", "psi3", "theta3",
]
