"""
Enumeración de caminos mínimos (MPs) sobre el grafo mixto.

Incluye la longitud LP_j y la capacidad CP_j(X) de cada camino, la
clasificación de MPs irrelevantes respecto a λ y la comprobación de arcos
que no pertenecen a ningún MP.
"""

import logging
from enum import Enum
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict

from ..core.exceptions import NetworkValidationError
from ..models.network import Network
from ..models.state import StateVector

logger = logging.getLogger(__name__)


class Orientation(str, Enum):
    FORWARD = "forward"
    REVERSE = "reverse"


class ArcStep(BaseModel):
    """
    Paso de un camino: arco (índice 0-based) y sentido de recorrido.
    """
    arc: int
    orientation: Orientation = Orientation.FORWARD

    model_config = ConfigDict(frozen=True)

    @property
    def reverse(self) -> bool:
        return self.orientation is Orientation.REVERSE


class MinimalPath(BaseModel):
    """
    Camino mínimo P_j de la fuente al sumidero.

    Atributos:
        steps (Tuple[ArcStep, ...]): Arcos recorridos en orden, con su orientación.
        nodes (Tuple[int, ...]): Nodos visitados, de la fuente al sumidero.
        length (int): LP_j, suma de longitudes de sus arcos.
        index (int): Índice 1-based j.
    """
    steps: Tuple[ArcStep, ...]
    nodes: Tuple[int, ...]
    length: int
    index: int

    model_config = ConfigDict(frozen=True)

    @property
    def arc_indices(self) -> Tuple[int, ...]:
        return tuple(step.arc for step in self.steps)

    @property
    def arc_set(self) -> FrozenSet[int]:
        return frozenset(self.arc_indices)

    def arc_ids(self, network: Network) -> Tuple[str, ...]:
        return tuple(network.arcs[i].id for i in self.arc_indices)

    def describe(self, network: Network) -> str:
        """Secuencia legible de arcos; los pasos en sentido inverso llevan '~'."""
        return " ".join(
            f"{network.arcs[s.arc].id}{'~' if s.reverse else ''}" for s in self.steps
        )


class PathSet(BaseModel):
    """
    Conjunto ordenado de MPs con su incidencia arco -> caminos.

    Atributos:
        paths (Tuple[MinimalPath, ...]): Caminos en orden determinista.
        arc_count (int): Número de arcos m de la red.
        arc_incidence (Tuple[Tuple[int, ...], ...]): Para cada arco, posiciones (0-based) de los caminos que lo usan.
    """
    paths: Tuple[MinimalPath, ...]
    arc_count: int
    arc_incidence: Tuple[Tuple[int, ...], ...]

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_paths(cls, paths: Sequence[MinimalPath], arc_count: int) -> "PathSet":
        incidence: List[List[int]] = [[] for _ in range(arc_count)]
        indexed = []
        for position, path in enumerate(paths):
            indexed.append(path.model_copy(update={"index": position + 1}))
            for arc in path.arc_indices:
                incidence[arc].append(position)
        return cls(
            paths=tuple(indexed),
            arc_count=arc_count,
            arc_incidence=tuple(tuple(row) for row in incidence),
        )

    @property
    def p(self) -> int:
        return len(self.paths)

    @property
    def lengths(self) -> Tuple[int, ...]:
        return tuple(path.length for path in self.paths)

    def path_arcs(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(path.arc_indices for path in self.paths)


class RelevanceSplit(BaseModel):
    """
    Partición de las posiciones de los caminos (0-based) según λ.
    """
    relevant: Tuple[int, ...]
    irrelevant: Tuple[int, ...]

    model_config = ConfigDict(frozen=True)


def _path_graph(network: Network) -> nx.MultiDiGraph:
    """Multigrafo con una arista por (arco, sentido); la clave es el ArcStep."""
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(range(1, network.node_count + 1))
    for i, arc in enumerate(network.arcs):
        graph.add_edge(arc.tail, arc.head, key=ArcStep(arc=i))
        if arc.undirected:
            graph.add_edge(arc.head, arc.tail, key=ArcStep(arc=i, orientation=Orientation.REVERSE))
    return graph


def _build_path(network: Network, steps: Sequence[ArcStep], nodes: Sequence[int]) -> MinimalPath:
    length = sum(network.arcs[s.arc].length for s in steps)
    return MinimalPath(steps=tuple(steps), nodes=tuple(nodes), length=length, index=0)


def _walk_declared(network: Network, arc_ids: Sequence[str]) -> MinimalPath:
    """
    Convierte un camino declarado (ids de arco) en pasos orientados.

    Raises:
        NetworkValidationError: Si no es un camino simple de la fuente al sumidero.
    """
    current = network.source
    nodes = [current]
    steps: List[ArcStep] = []
    for arc_id in arc_ids:
        i = network.arc_index(arc_id)
        arc = network.arcs[i]
        if arc.tail == current:
            step, nxt = ArcStep(arc=i), arc.head
        elif arc.undirected and arc.head == current:
            step, nxt = ArcStep(arc=i, orientation=Orientation.REVERSE), arc.tail
        else:
            raise NetworkValidationError(
                f"declared path {list(arc_ids)} cannot traverse {arc_id} from node {current}",
                arcs=[arc_id], nodes=[current],
            )
        if nxt in nodes:
            raise NetworkValidationError(
                f"declared path {list(arc_ids)} revisits node {nxt}", arcs=[arc_id], nodes=[nxt]
            )
        steps.append(step)
        nodes.append(nxt)
        current = nxt
    if current != network.sink or not steps:
        raise NetworkValidationError(
            f"declared path {list(arc_ids)} does not end at the sink", nodes=[current]
        )
    return _build_path(network, steps, nodes)


def enumerate_mps(network: Network) -> PathSet:
    """
    Enumera todos los caminos simples de la fuente al sumidero.

    Usa ``networkx.all_simple_edge_paths`` sobre un multigrafo con una arista
    por arco y sentido; los arcos no dirigidos aportan dos. El orden canónico es lexicográfico
    por la secuencia de nodos visitados (y de arcos, para arcos paralelos).
    Si la red declara sus MPs, se exige el mismo conjunto y se adopta su orden.

    Args:
        network (Network): Red validada.

    Returns:
        PathSet: Caminos mínimos; vacío si la fuente y el sumidero están desconectados.

    Raises:
        NetworkValidationError: Si los caminos declarados no coinciden con los enumerados.
    """
    graph = _path_graph(network)
    found: List[MinimalPath] = []
    for edge_path in nx.all_simple_edge_paths(graph, network.source, network.sink):
        steps = [key for _, _, key in edge_path]
        nodes = [network.source] + [head for _, head, _ in edge_path]
        found.append(_build_path(network, steps, nodes))
    found.sort(key=lambda path: (path.nodes, path.arc_indices))

    if network.declared_paths is not None:
        declared = [_walk_declared(network, ids) for ids in network.declared_paths]
        declared_keys = [path.steps for path in declared]
        declared_set = set(declared_keys)
        found_keys = {path.steps for path in found}
        if len(declared_set) != len(declared_keys) or declared_set != found_keys:
            missing = [path.describe(network) for path in found if path.steps not in declared_set]
            raise NetworkValidationError(
                f"declared paths do not match the enumerated minimal paths; undeclared: {missing}"
            )
        found = declared

    logger.info(f"Enumerated {len(found)} minimal paths.")
    return PathSet.from_paths(found, network.m)


def path_length(path: MinimalPath, network: Network) -> int:
    """LP_j = suma de l_i sobre los arcos del camino."""
    return sum(network.arcs[i].length for i in path.arc_indices)


def path_capacity(path: MinimalPath, state: Union[StateVector, Sequence[int]]) -> int:
    """
    CP_j(X) = min{x_i | a_i en P_j}.

    Args:
        path (MinimalPath): Camino.
        state (Union[StateVector, Sequence[int]]): Estado X de dimensión m.

    Returns:
        int: Capacidad del camino bajo X.
    """
    entries = state.entries if isinstance(state, StateVector) else state
    return min(entries[i] for i in path.arc_indices)


def path_capacity_vector(
    paths: PathSet,
    state: Union[StateVector, Sequence[int]],
    mask: Optional[Sequence[int]] = None,
) -> Tuple[Optional[int], ...]:
    """
    CP_j(X) para todos los caminos, o solo para las posiciones de `mask` (None en el resto).
    """
    selected = set(range(paths.p)) if mask is None else set(mask)
    return tuple(
        path_capacity(path, state) if j in selected else None
        for j, path in enumerate(paths.paths)
    )


def classify_relevant(paths: PathSet, distance_limit: Union[int, float]) -> RelevanceSplit:
    """
    Separa los MPs relevantes de los irrelevantes (LP_j > λ).

    Args:
        paths (PathSet): Caminos mínimos.
        distance_limit (Union[int, float]): λ; infinito marca todos como relevantes.

    Returns:
        RelevanceSplit: Posiciones relevantes e irrelevantes.
    """
    relevant = tuple(j for j, path in enumerate(paths.paths) if path.length <= distance_limit)
    irrelevant = tuple(j for j, path in enumerate(paths.paths) if path.length > distance_limit)
    return RelevanceSplit(relevant=relevant, irrelevant=irrelevant)


def arcs_on_no_path(network: Network, paths: PathSet) -> List[str]:
    """Ids de los arcos que no pertenecen a ningún MP."""
    return [network.arcs[i].id for i, users in enumerate(paths.arc_incidence) if not users]
