from .census import CensusRow, CensusTable, run_census, validate_census
from .claims import CLAIMS, check_all, check_claim
from .classical import dickson_audit, suzuki_arithmetic
from .context import GroupData, Workspace
from .report import ClaimReport, Instance, reports_to_json

__all__ = [
    "CLAIMS",
    "CensusRow",
    "CensusTable",
    "ClaimReport",
    "GroupData",
    "Instance",
    "Workspace",
    "check_all",
    "check_claim",
    "dickson_audit",
    "reports_to_json",
    "run_census",
    "suzuki_arithmetic",
    "validate_census",
]
