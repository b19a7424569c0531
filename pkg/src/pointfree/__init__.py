"""Finite pointfree topology: frames, MT-algebras, proximity morphisms,
Funayama envelopes, T_D spectra, D-morphisms and sober maps."""

from pointfree.frame import Frame, FrameMorphism, FramePoint
from pointfree.kernels import BACKEND
from pointfree.mt import MTAlgebra, MTMorphism
from pointfree.order import FinLattice, FinPoset
from pointfree.space import ContMap, FinSpace, SoberMap

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FinPoset",
    "FinLattice",
    "Frame",
    "FrameMorphism",
    "FramePoint",
    "FinSpace",
    "ContMap",
    "SoberMap",
    "MTAlgebra",
    "MTMorphism",
]
