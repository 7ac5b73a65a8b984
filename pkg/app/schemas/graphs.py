"""
Schemas de intercambio de grafos.
"""
from typing import List

from pydantic import BaseModel, Field, model_validator


class GraphPayload(BaseModel):
    """{"vertices": m, "adjacency": [[...]]}"""
    vertices: int = Field(..., ge=0, description="Número de vértices m")
    adjacency: List[List[int]] = Field(..., description="Matriz de adyacencia m x m")

    @model_validator(mode="after")
    def check_shape(self):
        if len(self.adjacency) != self.vertices:
            raise ValueError(f"adjacency tiene {len(self.adjacency)} filas, se esperaban {self.vertices}")
        ragged = [i for i, row in enumerate(self.adjacency) if len(row) != self.vertices]
        if ragged:
            raise ValueError(f"Las filas {ragged} de adjacency no tienen {self.vertices} entradas")
        return self
