"""
Jerarquía de errores del proyecto.

Cada error lleva un código de máquina (``error``), un mensaje legible y el
código de salida que usa la CLI. ``to_detail()`` produce el cuerpo uniforme
que se imprime en stderr:

    {"success": false, "exit_code": 3, "message": "...", "error": "MISSING_MODULAR_POLYNOMIAL"}
"""
from typing import Any, Dict, Optional


# Códigos de salida de la CLI
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CLAIM_FAILURE = 2
EXIT_MISSING_DATA = 3
EXIT_OBSTRUCTION = 4


class BrandtZetaError(Exception):
    """Error base. Las subclases fijan ``error`` y ``exit_code``."""

    error: str = "INTERNAL_ERROR"
    exit_code: int = EXIT_CLAIM_FAILURE

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_detail(self) -> Dict[str, Any]:
        detail = {
            "success": False,
            "exit_code": self.exit_code,
            "message": self.message,
            "error": self.error,
        }
        if self.details:
            detail["details"] = self.details
        return detail


class UsageError(BrandtZetaError):
    error = "USAGE_ERROR"
    exit_code = EXIT_USAGE


# ==================== EXACT CORE ====================

class CompositeModulus(UsageError):
    error = "COMPOSITE_MODULUS"


class ZeroPolynomial(BrandtZetaError):
    error = "ZERO_POLYNOMIAL"


class NonSquare(BrandtZetaError):
    error = "NON_SQUARE_MATRIX"


class InvalidInterval(BrandtZetaError):
    error = "INVALID_INTERVAL"


class ZeroDenominator(BrandtZetaError):
    error = "ZERO_DENOMINATOR"


class ExactDivisionFailure(BrandtZetaError):
    error = "EXACT_DIVISION_FAILURE"


class InternalInconsistency(BrandtZetaError):
    error = "INTERNAL_INCONSISTENCY"


# ==================== GRAPH / ZETA ====================

class AsymmetricMatrix(BrandtZetaError):
    """La matriz de adyacencia debe cumplir a_ij = a_ji."""
    error = "ASYMMETRIC_MATRIX"


class NegativeEntry(BrandtZetaError):
    """La matriz de adyacencia no admite entradas negativas."""
    error = "NEGATIVE_ENTRY"


class OddDiagonal(BrandtZetaError):
    """a_ii impar: un lazo aporta 2 a la diagonal."""
    error = "ODD_DIAGONAL"


class DisconnectedGraph(BrandtZetaError):
    error = "DISCONNECTED_GRAPH"


class NotRegular(BrandtZetaError):
    error = "NOT_REGULAR"


class BudgetExceeded(BrandtZetaError):
    error = "BUDGET_EXCEEDED"


# ==================== ARITHMETIC ====================

class EvenCharacteristic(UsageError):
    error = "EVEN_CHARACTERISTIC"


class SingularLambda(BrandtZetaError):
    error = "SINGULAR_LAMBDA"


class MassFormulaViolation(BrandtZetaError):
    error = "MASS_FORMULA_VIOLATION"


class WeightNotOne(MassFormulaViolation):
    error = "WEIGHT_NOT_ONE"


class ParseError(BrandtZetaError):
    error = "PARSE_ERROR"
    exit_code = EXIT_MISSING_DATA


class LevelMismatch(ParseError):
    error = "LEVEL_MISMATCH"


class SymmetryViolation(ParseError):
    error = "SYMMETRY_VIOLATION"


class MissingModularPolynomial(BrandtZetaError):
    error = "MISSING_MODULAR_POLYNOMIAL"
    exit_code = EXIT_MISSING_DATA


class RowSumViolation(BrandtZetaError):
    error = "ROW_SUM_VIOLATION"


class NotCongruentOneMod12(UsageError):
    error = "NOT_CONGRUENT_ONE_MOD_12"


class ModelConstructionFailure(BrandtZetaError):
    error = "MODEL_CONSTRUCTION_FAILURE"


class ParityObstruction(BrandtZetaError):
    """Diagonal impar: B(p) no es matriz de adyacencia de un grafo."""
    error = "PARITY_OBSTRUCTION"
    exit_code = EXIT_OBSTRUCTION


class NotRealizable(BrandtZetaError):
    """El exponente n(p-1)/2 no es entero: no hay zeta racional cerrada."""
    error = "NOT_REALIZABLE"
    exit_code = EXIT_OBSTRUCTION
