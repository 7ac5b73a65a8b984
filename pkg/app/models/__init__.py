from .fields import Field, FieldElement
from .polynomials import IntPolynomial, QuadraticBound, RationalFunction
from .graph import AdjacencyMatrix, MultiGraph, OrientedEdge, StructureFlags
from .zeta import HasseWeilZeta, IharaZeta, RamanujanVerdict
from .arithmetic import BrandtMatrix, ModularPolynomial, SupersingularLocus
from .eigenforms import FIXTURES, EigenformFixture, EigenformOrbit

__all__ = [
    "Field",
    "FieldElement",
    "IntPolynomial",
    "QuadraticBound",
    "RationalFunction",
    "AdjacencyMatrix",
    "MultiGraph",
    "OrientedEdge",
    "StructureFlags",
    "HasseWeilZeta",
    "IharaZeta",
    "RamanujanVerdict",
    "BrandtMatrix",
    "ModularPolynomial",
    "SupersingularLocus",
    "FIXTURES",
    "EigenformFixture",
    "EigenformOrbit",
]
