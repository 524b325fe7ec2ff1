from .dlmp import (
    CandidateRecord,
    DlmpResult,
    classical_dmps,
    cycle_check,
    find_dlmps,
    is_antichain,
    verify_real_dlmp,
)
from .complexity import SweepPoint, check_growth, complexity_sweep, loglog_slope, scale_capacities

__all__ = [
    "CandidateRecord",
    "DlmpResult",
    "classical_dmps",
    "cycle_check",
    "find_dlmps",
    "is_antichain",
    "verify_real_dlmp",
    "SweepPoint",
    "check_growth",
    "complexity_sweep",
    "loglog_slope",
    "scale_capacities",
]
