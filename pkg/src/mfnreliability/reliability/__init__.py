from .union import (
    ReliabilityReport,
    UpperSet,
    reliability,
    reliability_from_dlmps,
    upper_set_probability,
)

__all__ = [
    "ReliabilityReport",
    "UpperSet",
    "reliability",
    "reliability_from_dlmps",
    "upper_set_probability",
]
