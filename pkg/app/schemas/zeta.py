"""
Schemas de funciones racionales y funciones zeta.
"""
from typing import List, Optional

from pydantic import BaseModel, Field


class RationalFunctionPayload(BaseModel):
    """Coeficientes enteros de grado menor a mayor."""
    numerator: List[int]
    denominator: List[int]


class RamanujanPayload(BaseModel):
    degree: Optional[int]
    is_regular: bool
    is_connected: bool
    is_bipartite: bool
    is_ramanujan: bool
    outside_count: int


class IharaZetaPayload(BaseModel):
    """Salida del comando zeta y de emit zeta."""
    zeta: RationalFunctionPayload
    euler_characteristic: int
    geometric: bool = Field(True, description="False para la zeta formal de B(p) con diagonal impar")
    hashimoto_agrees: Optional[bool] = None
    ramanujan: Optional[RamanujanPayload] = None


class HasseWeilPayload(BaseModel):
    N: int
    p: int
    zeta: RationalFunctionPayload
    numerator_degree: int
    point_counts: List[int] = Field(default_factory=list, description="#X_0(N)(F_{p^r}) para r = 1, 2, ...")
