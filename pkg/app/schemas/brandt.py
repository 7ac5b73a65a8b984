"""
Schemas del lugar supersingular y de matrices de Brandt.
"""
from typing import List, Optional

from pydantic import BaseModel, Field


class LocusListing(BaseModel):
    """Salida de ss-enum."""
    N: int
    count: int
    j_invariants: List[List[int]] = Field(..., description="Pares (a, b) de a + b*g en F_{N^2}")
    nonresidue: int = Field(..., description="d con g^2 = d")
    mass_check: str = Field(..., description="pass | fail | skip")
    expected: Optional[int] = Field(None, description="(N-1)/12 cuando 12 | N-1")


class BrandtPayload(BaseModel):
    """{"N", "p", "j_invariants", "matrix"}"""
    N: int
    p: int
    j_invariants: List[List[int]]
    matrix: List[List[int]]
