from .brandt import BrandtPayload, LocusListing
from .commands import BrandtMethod, CommandConfig, OutputFormat
from .graphs import GraphPayload
from .reports import (
    ClaimResult,
    ClaimStatus,
    Discrepancy,
    SelftestReport,
    TableReport,
    TableRow,
    VerificationReport,
)
from .zeta import HasseWeilPayload, IharaZetaPayload, RamanujanPayload, RationalFunctionPayload

__all__ = [
    "BrandtPayload",
    "LocusListing",
    "BrandtMethod",
    "CommandConfig",
    "OutputFormat",
    "GraphPayload",
    "ClaimResult",
    "ClaimStatus",
    "Discrepancy",
    "SelftestReport",
    "TableReport",
    "TableRow",
    "VerificationReport",
    "HasseWeilPayload",
    "IharaZetaPayload",
    "RamanujanPayload",
    "RationalFunctionPayload",
]
