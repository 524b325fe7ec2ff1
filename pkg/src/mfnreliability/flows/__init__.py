from .solver import (
    FlowVector,
    SolverBounds,
    count_ffvs,
    enumerate_ffvs,
    iter_flow_tuples,
    satisfies_system,
)
from .transform import ffv_to_ssv, transmission_distance

__all__ = [
    "FlowVector",
    "SolverBounds",
    "count_ffvs",
    "enumerate_ffvs",
    "iter_flow_tuples",
    "satisfies_system",
    "ffv_to_ssv",
    "transmission_distance",
]
