"""Exact computations in the affine nil-Hecke algebra and the affine Nichols-Woronowicz algebra."""

from .affine_weyl import AffineRootLabel, AffineWeylElement
from .nichols import BAfSElement, TensorElement
from .nilhecke import NilCoxeterElement, NilHeckeElement
from .poly import Polynomial
from .roots import CartanData, RootSystem, build_root_system, preset

__version__ = "0.1.0"

__all__ = [
    "AffineRootLabel", "AffineWeylElement", "BAfSElement", "CartanData", "NilCoxeterElement",
    "NilHeckeElement", "Polynomial", "RootSystem", "TensorElement", "build_root_system", "preset",
]
