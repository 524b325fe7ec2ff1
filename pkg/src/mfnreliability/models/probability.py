"""
Probabilidades por arco a partir de la distribución de capacidad.

La probabilidad de un conjunto superior {X : X >= z} es el producto de las
colas P(x_i >= z_i), porque los arcos son estadísticamente independientes.
"""

from typing import List, Sequence

import numpy as np

from ..core.exceptions import MissingPMFError
from .network import Arc, Network


def tail_vector(arc: Arc) -> np.ndarray:
    """
    Colas acumuladas de un arco: tails[c] = P(capacidad >= c) para c = 0..M_i.

    Args:
        arc (Arc): Arco con pmf.

    Returns:
        np.ndarray: Vector de longitud M_i + 1 con tails[0] == 1.

    Raises:
        MissingPMFError: Si el arco no tiene distribución.
    """
    if arc.pmf is None:
        raise MissingPMFError([arc.id])
    pmf = np.asarray(arc.pmf, dtype=float)
    tails = np.cumsum(pmf[::-1])[::-1]
    tails[0] = 1.0
    return tails


def tail_probability(arc: Arc, c: int) -> float:
    """
    P(capacidad de a_i >= c).

    Args:
        arc (Arc): Arco con pmf.
        c (int): Nivel de capacidad, c >= 0.

    Returns:
        float: 1 si c == 0, 0 si c > M_i, y sum(pmf[c:]) en otro caso.

    Raises:
        MissingPMFError: Si el arco no tiene distribución.
        ValueError: Si c es negativo.
    """
    if c < 0:
        raise ValueError(f"capacity level must be non-negative, got {c}")
    if arc.pmf is None:
        raise MissingPMFError([arc.id])
    if c == 0:
        return 1.0
    if c > arc.max_capacity:
        return 0.0
    return float(tail_vector(arc)[c])


def tail_table(network: Network) -> List[np.ndarray]:
    """
    Tabla de colas para todos los arcos de la red.

    Raises:
        MissingPMFError: Con la lista completa de arcos sin pmf.
    """
    missing = network.missing_pmfs()
    if missing:
        raise MissingPMFError(missing)
    return [tail_vector(arc) for arc in network.arcs]


def pmf_table(network: Network) -> List[np.ndarray]:
    missing = network.missing_pmfs()
    if missing:
        raise MissingPMFError(missing)
    return [np.asarray(arc.pmf, dtype=float) for arc in network.arcs]


def upper_probability(floor: Sequence[int], tails: Sequence[np.ndarray]) -> float:
    """P(X >= floor) como producto de colas; 0 si algún z_i supera M_i."""
    result = 1.0
    for z, column in zip(floor, tails):
        if z >= len(column):
            return 0.0
        result *= float(column[z])
    return result
