"""Coset combinatorics, Ariki-Koike Hecke algebras and the Mackey formula for G(r,1,n)."""

from .coeff import LaurentPoly, LaurentRing
from .wgroup import DoubleCosetDatum, ParabolicIndex, WElem

__all__ = ["LaurentPoly", "LaurentRing", "WElem", "ParabolicIndex", "DoubleCosetDatum"]
__version__ = "0.1.0"
