from .paths import (
    ArcStep,
    MinimalPath,
    Orientation,
    PathSet,
    RelevanceSplit,
    arcs_on_no_path,
    classify_relevant,
    enumerate_mps,
    path_capacity,
    path_capacity_vector,
    path_length,
)
from .maxflow import capacity_graph, max_flow

__all__ = [
    "ArcStep",
    "MinimalPath",
    "Orientation",
    "PathSet",
    "RelevanceSplit",
    "arcs_on_no_path",
    "classify_relevant",
    "enumerate_mps",
    "path_capacity",
    "path_capacity_vector",
    "path_length",
    "capacity_graph",
    "max_flow",
]
