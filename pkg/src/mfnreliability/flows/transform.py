"""
Transformación de un FFV en su SSV y distancia de transmisión.
"""

from typing import Sequence, Union

from ..core.exceptions import UndefinedDistanceError
from ..graph.paths import PathSet
from ..models.state import StateVector
from .solver import FlowVector


def _flows(flow: Union[FlowVector, Sequence[int]]) -> Sequence[int]:
    return flow.flows if isinstance(flow, FlowVector) else flow


def ffv_to_ssv(flow: Union[FlowVector, Sequence[int]], paths: PathSet) -> StateVector:
    """
    x_i = suma de f_j sobre los caminos P_j que contienen a_i.

    Args:
        flow (Union[FlowVector, Sequence[int]]): Vector de flujo de dimensión p.
        paths (PathSet): Caminos mínimos.

    Returns:
        StateVector: Estado del sistema inducido por el flujo.

    Raises:
        ValueError: Si la dimensión del flujo no coincide con p.
    """
    flows = _flows(flow)
    if len(flows) != paths.p:
        raise ValueError(f"flow has {len(flows)} entries, expected {paths.p}")
    entries = tuple(sum(flows[j] for j in users) for users in paths.arc_incidence)
    return StateVector(entries=entries)


def transmission_distance(flow: Union[FlowVector, Sequence[int]], paths: PathSet) -> int:
    """
    Mayor longitud LP_j entre los caminos con flujo positivo.

    Raises:
        UndefinedDistanceError: Si el flujo es nulo.
    """
    flows = _flows(flow)
    lengths = [path.length for f, path in zip(flows, paths.paths) if f > 0]
    if not lengths:
        raise UndefinedDistanceError("transmission distance is undefined for the zero flow")
    return max(lengths)
