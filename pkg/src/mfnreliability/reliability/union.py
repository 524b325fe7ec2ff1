"""
Confiabilidad R_(d,λ) como probabilidad de la unión de conjuntos superiores.

Cada (d,λ)-MP X^i define S_i = {X : X^i <= X <= M}. La intersección de
varios S_i es el conjunto superior del máximo componente a componente, y su
probabilidad es el producto de colas por arco (arcos independientes).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations
from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..core.config import settings
from ..core.exceptions import GuardExceededError
from ..graph.paths import PathSet
from ..models.network import Network
from ..models.probability import tail_table, upper_probability
from ..models.state import Demand, StateVector
from ..search.dlmp import find_dlmps

logger = logging.getLogger(__name__)

Method = Literal["subsets", "recursive"]
Floor = Tuple[int, ...]


class UpperSet(BaseModel):
    """
    Conjunto superior S_i = {X : floor <= X <= M}.
    """
    floor: StateVector

    model_config = ConfigDict(frozen=True)

    def probability(self, tails: Sequence[np.ndarray]) -> float:
        return upper_probability(self.floor.entries, tails)

    def intersect(self, other: "UpperSet") -> "UpperSet":
        return UpperSet(floor=StateVector(entries=_componentwise_max([self.floor.entries, other.floor.entries])))


class ReliabilityReport(BaseModel):
    """
    Resultado del cálculo de confiabilidad.

    Atributos:
        value (float): R_(d,λ) en [0, 1].
        term_count (int): Términos de inclusión-exclusión evaluados.
        dlmp_count (int): Número de (d,λ)-MPs usados.
        method (str): "subsets" o "recursive".
    """
    value: float = Field(..., ge=0.0, le=1.0)
    term_count: int
    dlmp_count: int
    method: Method = "subsets"

    model_config = ConfigDict(frozen=True)


def _componentwise_max(floors: Sequence[Floor]) -> Floor:
    return tuple(max(column) for column in zip(*floors))


def _entries(vectors: Sequence[StateVector]) -> List[Floor]:
    return [v.entries for v in vectors]


def upper_set_probability(floors: Sequence[StateVector], network: Network) -> float:
    """
    P(X >= z) con z el máximo componente a componente de los pisos.

    Args:
        floors (Sequence[StateVector]): Pisos X^i; una lista vacía representa todo el espacio.
        network (Network): Red con pmf en todos los arcos.

    Returns:
        float: Probabilidad de la intersección de los S_i.

    Raises:
        MissingPMFError: Si algún arco no tiene distribución.
    """
    tails = tail_table(network)
    if not floors:
        return 1.0
    return upper_probability(_componentwise_max(_entries(floors)), tails)


def _subsets_union(
    floors: List[Floor],
    tails: Sequence[np.ndarray],
    workers: int,
) -> Tuple[float, int]:
    sigma = len(floors)

    def term(subset: Tuple[int, ...]) -> float:
        return upper_probability(_componentwise_max([floors[i] for i in subset]), tails)

    total = 0.0
    count = 0
    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for k in range(1, sigma + 1):
            subsets = combinations(range(sigma), k)
            values = executor.map(term, subsets) if executor else map(term, subsets)
            sign = 1.0 if k % 2 == 1 else -1.0
            for value in values:
                total += sign * value
                count += 1
    finally:
        if executor:
            executor.shutdown()
    return total, count


def _absorb(floors: Sequence[Floor]) -> Tuple[Floor, ...]:
    # S(z) está contenido en S(w) cuando z >= w
    unique = sorted(set(floors))
    kept = [
        z for z in unique
        if not any(w != z and all(a >= b for a, b in zip(z, w)) for w in unique)
    ]
    return tuple(kept)


def _recursive_union(floors: List[Floor], tails: Sequence[np.ndarray]) -> Tuple[float, int]:
    evaluations = 0

    @lru_cache(maxsize=None)
    def union(group: Tuple[Floor, ...]) -> float:
        nonlocal evaluations
        if not group:
            return 0.0
        first, rest = group[0], group[1:]
        evaluations += 1
        head = upper_probability(first, tails)
        overlap = _absorb([_componentwise_max([first, z]) for z in rest])
        return head + union(rest) - union(overlap)

    value = union(_absorb(floors))
    return value, evaluations


def reliability_from_dlmps(
    dlmps: Sequence[StateVector],
    network: Network,
    sigma_guard: Optional[int] = None,
    allow_large: bool = False,
    method: Method = "subsets",
    workers: int = 1,
) -> ReliabilityReport:
    """
    R = P(S_1 ∪ ... ∪ S_σ) por inclusión-exclusión exacta.

    Con ``method="subsets"`` se suman los 2^σ - 1 términos por cardinalidad
    creciente y se exige σ <= sigma_guard salvo ``allow_large``. Con
    ``method="recursive"`` se expande P(S_1 ∪ R) = P(S_1) + P(R) - P(∪ S_1 ∩ S_i)
    absorbiendo pisos dominados; no está sujeto al límite.

    Args:
        dlmps (Sequence[StateVector]): (d,λ)-MPs sin duplicados.
        network (Network): Red con pmf en todos los arcos.
        sigma_guard (Optional[int]): Límite de σ (``settings.SIGMA_GUARD`` por defecto).
        allow_large (bool): Ignora el límite.
        method (Method): "subsets" o "recursive".
        workers (int): Hilos para evaluar los términos de cada cardinalidad.

    Returns:
        ReliabilityReport: Valor recortado a [0, 1] y número de términos.

    Raises:
        MissingPMFError: Si algún arco no tiene distribución.
        GuardExceededError: Si σ supera el límite con el método por subconjuntos.
    """
    tails = tail_table(network)
    floors = _entries(dlmps)
    sigma = len(floors)
    if method == "subsets":
        guard = sigma_guard if sigma_guard is not None else settings.SIGMA_GUARD
        if sigma > guard:
            if not allow_large:
                raise GuardExceededError(sigma, guard)
            logger.warning(f"Evaluating 2^{sigma} - 1 inclusion-exclusion terms above the guard of {guard}.")
        value, terms = _subsets_union(floors, tails, workers)
    elif method == "recursive":
        value, terms = _recursive_union(floors, tails)
    else:
        raise ValueError(f"unknown reliability method {method!r}")
    logger.info(f"Reliability {value:.12g} from {sigma} minimal vectors ({terms} terms, {method}).")
    return ReliabilityReport(
        value=min(1.0, max(0.0, value)),
        term_count=terms,
        dlmp_count=sigma,
        method=method,
    )


def reliability(
    network: Network,
    demand: Demand,
    sigma_guard: Optional[int] = None,
    allow_large: bool = False,
    method: Method = "subsets",
    workers: Optional[int] = None,
    paths: Optional[PathSet] = None,
) -> ReliabilityReport:
    """Ejecuta find_dlmps y calcula R_(d,λ) sobre su resultado."""
    result = find_dlmps(network, demand, paths=paths, workers=workers)
    return reliability_from_dlmps(
        result.dlmps,
        network,
        sigma_guard=sigma_guard,
        allow_large=allow_large,
        method=method,
        workers=workers if workers is not None else settings.worker_count,
    )
