"""
Schemas de reportes de verificación y de tablas.
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


# ==================== ENUMS ====================

class ClaimStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"
    # Enunciado refutado por el cálculo: queda en el reporte, no cuenta como fallo
    FINDING = "finding"


# ==================== CLAIMS ====================

# Cada id de verify corresponde a un único enunciado
CLAIM_STATEMENTS: Dict[str, str] = {
    "mass": "Σ 1/w_i = (N - 1)/12 con todos los pesos w_i = 1",
    "brandt.symmetric": "B(p) es simétrica",
    "brandt.even_diagonal": "La diagonal de B(p) es par",
    "brandt.row_sums": "Cada fila de B(p) suma p + 1",
    "zeta.reciprocity": "W·Z = 1 / ((1-t)²(1-pt)²(1-t²)^(n(p-1)/2))",
    "zeta.residue": "lim_{t→1} (t - 1)·W = n·τ / (p - 1)",
    "mu.divisibility": "n divide a μ_N(p) = det B(p) / (p + 1) cuando n divide a p + 1",
    "hecke.tree_count": "P(1) = Π(1 + p - a_p) = n·τ",
    "tree_count.bounds": "((p+1) - 2√p)^(n-1) <= n·τ <= ((p+1) + 2√p)^(n-1)",
    "graph.ramanujan": "G_N(p) es conexo, no bipartito, (p+1)-regular y Ramanujan",
    "weil.window": "Las raíces de R(x) = Π(x - a_p) están en [-2√p, 2√p]",
}


class Discrepancy(BaseModel):
    """Diferencia entre un valor calculado y un dato tabulado."""
    claim: str = Field(..., description="Identificador del enunciado afectado")
    computed: Any = Field(..., description="Valor calculado (autoritativo)")
    expected: Any = Field(..., description="Valor tabulado")
    note: str = Field("", description="Procedencia o explicación")


class ClaimResult(BaseModel):
    """Resultado de un enunciado verificado."""
    id: str = Field(..., description="Identificador estable, p. ej. zeta.reciprocity")
    status: ClaimStatus
    computed: Any = Field(None, description="Testigo calculado")
    expected: Any = Field(None, description="Valor esperado")
    note: str = Field("", description="Procedencia")
    statement: Optional[str] = Field(None, description="Enunciado que verifica el id (CLAIM_STATEMENTS)")

    @model_validator(mode="after")
    def attach_statement(self):
        if self.statement is None:
            self.statement = CLAIM_STATEMENTS.get(self.id)
        return self


class VerificationReport(BaseModel):
    """Reporte por par (N, p)."""
    N: int
    p: Optional[int] = None
    claims: List[ClaimResult] = Field(default_factory=list)
    discrepancies: List[Discrepancy] = Field(default_factory=list)

    def claim(self, claim_id: str) -> Optional[ClaimResult]:
        for c in self.claims:
            if c.id == claim_id:
                return c
        return None

    @property
    def passed(self) -> bool:
        """True si ningún enunciado no omitido falla."""
        return all(c.status != ClaimStatus.FAIL for c in self.claims)


# ==================== TABLAS ====================

class TableRow(BaseModel):
    """Fila de la tabla de coeficientes para un primo p."""
    p: int
    status: ClaimStatus = ClaimStatus.PASS
    trace_sum: Optional[int] = Field(None, description="trace B(p) - (p+1) = Σ a_p(f_i)")
    mu: Optional[int] = Field(None, description="μ_N(p) = det B(p) / (p+1)")
    divisible: Optional[bool] = Field(None, description="n | μ cuando n | p+1; None si no aplica")
    fixture_sum: Optional[int] = None
    fixture_mu: Optional[int] = None
    fixture_match: Optional[bool] = Field(None, description="None si no hay dato tabulado")
    note: str = ""


class TableReport(BaseModel):
    N: int
    n: int
    rows: List[TableRow] = Field(default_factory=list)
    discrepancies: List[Discrepancy] = Field(default_factory=list)


# ==================== SELFTEST ====================

class SelftestReport(BaseModel):
    """Corpus de propiedades más la matriz de aceptación."""
    seed: int
    corpus_size: int
    checks: List[ClaimResult] = Field(default_factory=list)
    acceptance: List[VerificationReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != ClaimStatus.FAIL for c in self.checks) and all(r.passed for r in self.acceptance)
