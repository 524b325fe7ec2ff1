"""
Flujo máximo V(X) de la fuente al sumidero bajo un estado X.

Cada arco no dirigido se sustituye por dos arcos antiparalelos de la misma
capacidad; la cancelación de flujo hace equivalente el valor máximo.
"""

from typing import Sequence, Union

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from ..models.network import Network
from ..models.state import StateVector


def capacity_graph(network: Network, state: Union[StateVector, Sequence[int]]) -> nx.DiGraph:
    """
    Construye el grafo dirigido con capacidades x_i (arcos paralelos se suman).

    Args:
        network (Network): Red.
        state (Union[StateVector, Sequence[int]]): Estado X de dimensión m.

    Returns:
        nx.DiGraph: Grafo con atributo 'capacity' en cada arista.
    """
    entries = state.entries if isinstance(state, StateVector) else tuple(state)
    if len(entries) != network.m:
        raise ValueError(f"state has {len(entries)} entries, network has {network.m} arcs")
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, network.node_count + 1))

    def add(u: int, v: int, capacity: int) -> None:
        if graph.has_edge(u, v):
            graph[u][v]["capacity"] += capacity
        else:
            graph.add_edge(u, v, capacity=capacity)

    for arc, x in zip(network.arcs, entries):
        add(arc.tail, arc.head, x)
        if arc.undirected:
            add(arc.head, arc.tail, x)
    return graph


def max_flow(network: Network, state: Union[StateVector, Sequence[int]]) -> int:
    """
    Flujo máximo exacto V(X) con el algoritmo de Edmonds-Karp.

    Args:
        network (Network): Red.
        state (Union[StateVector, Sequence[int]]): Capacidades actuales de los arcos.

    Returns:
        int: Valor del flujo máximo.
    """
    graph = capacity_graph(network, state)
    value = nx.maximum_flow_value(graph, network.source, network.sink, flow_func=edmonds_karp)
    return int(value)
