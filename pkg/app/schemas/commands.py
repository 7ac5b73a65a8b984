"""
Configuración validada de una invocación de la CLI.
"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, field_validator
from sympy.ntheory import isprime


class OutputFormat(str, Enum):
    JSON = "json"
    DOT = "dot"
    CSV = "csv"
    TEXT = "text"


class BrandtMethod(str, Enum):
    MODPOLY = "modpoly"
    VELU2 = "velu2"


class CommandConfig(BaseModel):
    """Un comando por invocación; N y p se validan primos antes del despacho."""
    command: str
    N: Optional[int] = Field(None, description="Nivel primo")
    p: Optional[int] = Field(None, description="Primo de Hecke")
    p_max: Optional[int] = Field(None, description="Cota superior del rango de primos")
    method: BrandtMethod = BrandtMethod.MODPOLY
    data_dir: Optional[str] = None
    format: OutputFormat = OutputFormat.JSON
    out: Optional[str] = None

    @field_validator("N", "p")
    @classmethod
    def must_be_prime(cls, v):
        if v is not None and not isprime(v):
            raise ValueError(f"{v} no es primo")
        return v

    @field_validator("p_max")
    @classmethod
    def positive(cls, v):
        if v is not None and v < 2:
            raise ValueError("p-max debe ser >= 2")
        return v
