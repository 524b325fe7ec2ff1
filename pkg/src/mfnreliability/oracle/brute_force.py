"""
Oráculo de fuerza bruta sobre el espacio de estados completo.

Recorre todos los X con 0 <= X <= M en orden de odómetro (arco 1 el más
rápido), decide la pertenencia a Ψ(G,d,λ) con el mismo sistema acotado que la
búsqueda, bajo capacidades X, y acumula la probabilidad de los estados
miembros.
"""

import logging
from itertools import product
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..core.config import settings
from ..core.exceptions import StateLimitExceededError
from ..flows.solver import enumerate_ffvs
from ..graph.paths import PathSet, enumerate_mps
from ..models.network import Network
from ..models.probability import pmf_table
from ..models.state import Demand, StateVector
from ..reliability.union import ReliabilityReport
from ..search.dlmp import DlmpResult

logger = logging.getLogger(__name__)


class OracleResult(BaseModel):
    """
    Resultado del oráculo.

    Atributos:
        psi_count (int): Estados en Ψ(G,d,λ).
        minimal_vectors (Tuple[StateVector, ...]): Vectores mínimos de Ψ en orden lexicográfico.
        reliability (Optional[float]): Suma de probabilidades de Ψ; None sin pmf.
        state_count (int): Tamaño del espacio de estados recorrido.
    """
    psi_count: int
    minimal_vectors: Tuple[StateVector, ...]
    reliability: Optional[float] = None
    state_count: int

    model_config = ConfigDict(frozen=True)


class VerificationOutcome(BaseModel):
    """
    Comparación entre la búsqueda y el oráculo.

    Atributos:
        sets_equal (bool): Igualdad de conjuntos de vectores mínimos.
        missing (Tuple[Tuple[int, ...], ...]): Vectores del oráculo que la búsqueda no encontró.
        extra (Tuple[Tuple[int, ...], ...]): Vectores de la búsqueda ausentes en el oráculo.
        reliability_delta (Optional[float]): |R búsqueda - R oráculo| si ambos existen.
        passed (bool): Resultado global.
    """
    sets_equal: bool
    missing: Tuple[Tuple[int, ...], ...] = ()
    extra: Tuple[Tuple[int, ...], ...] = ()
    reliability_delta: Optional[float] = None
    passed: bool

    model_config = ConfigDict(frozen=True)


def demand_satisfiable(
    network: Network,
    state: StateVector,
    demand: Demand,
    paths: Optional[PathSet] = None,
) -> bool:
    """
    Pertenencia a Ψ(G,d,λ): existe un d-FFV factible con capacidades X.

    Args:
        network (Network): Red.
        state (StateVector): Estado X.
        demand (Demand): d y λ.
        paths (Optional[PathSet]): MPs ya enumerados.

    Returns:
        bool: True si la demanda se satisface dentro del límite de distancia.
    """
    if demand.d == 0:
        return True
    if paths is None:
        paths = enumerate_mps(network)
    flows = enumerate_ffvs(network, paths, demand, capacities=state, first_only=True)
    return next(flows, None) is not None


def brute_force(
    network: Network,
    demand: Demand,
    paths: Optional[PathSet] = None,
    state_limit: Optional[int] = None,
    use_monotonicity: bool = True,
) -> OracleResult:
    """
    Calcula Ψ(G,d,λ), sus vectores mínimos y la confiabilidad exacta.

    Con ``use_monotonicity`` un estado es miembro sin resolver el sistema si
    algún X - e_i ya lo es; los mínimos son los miembros sin ningún X - e_i
    miembro. Sin ella se resuelve cada estado y los mínimos se filtran por
    dominancia frente a los mínimos ya encontrados.

    Args:
        network (Network): Red.
        demand (Demand): d y λ.
        paths (Optional[PathSet]): MPs ya enumerados.
        state_limit (Optional[int]): Máximo de estados (``settings.STATE_LIMIT`` por defecto).
        use_monotonicity (bool): Atajo por monotonía de Ψ.

    Returns:
        OracleResult: Resultado del recorrido completo.

    Raises:
        StateLimitExceededError: Si prod(M_i + 1) supera el límite.
    """
    size = network.state_space_size()
    limit = state_limit if state_limit is not None else settings.STATE_LIMIT
    if size > limit:
        raise StateLimitExceededError(size, limit)
    if paths is None:
        paths = enumerate_mps(network)

    m = network.m
    radices = [cap + 1 for cap in network.max_capacity]
    strides = [1] * m
    for i in range(1, m):
        strides[i] = strides[i - 1] * radices[i - 1]
    pmfs = pmf_table(network) if network.has_pmfs() else None

    member = np.zeros(size, dtype=bool)
    minimal: List[StateVector] = []
    psi_count = 0
    total = 0.0
    for index, reversed_entries in enumerate(product(*(range(r) for r in reversed(radices)))):
        entries = reversed_entries[::-1]
        state = StateVector(entries=entries)
        if use_monotonicity:
            covered = any(member[index - strides[i]] for i in range(m) if entries[i] > 0)
            inside = covered or demand_satisfiable(network, state, demand, paths)
            if inside and not covered:
                minimal.append(state)
        else:
            inside = demand_satisfiable(network, state, demand, paths)
            if inside and not any(state.dominates(low) for low in minimal):
                minimal.append(state)
        if not inside:
            continue
        member[index] = True
        psi_count += 1
        if pmfs is not None:
            total += float(np.prod([pmfs[i][x] for i, x in enumerate(entries)]))

    value = min(1.0, max(0.0, total)) if pmfs is not None else None
    logger.info(f"Oracle visited {size} states: {psi_count} in Psi, {len(minimal)} minimal vectors.")
    return OracleResult(
        psi_count=psi_count,
        minimal_vectors=tuple(sorted(minimal, key=lambda x: x.entries)),
        reliability=value,
        state_count=size,
    )


def compare(
    search_result: DlmpResult,
    oracle_result: OracleResult,
    report: Optional[ReliabilityReport] = None,
    tolerance: Optional[float] = None,
) -> VerificationOutcome:
    """
    Compara la búsqueda con el oráculo: igualdad de conjuntos y, si hay
    confiabilidad en ambos lados, diferencia dentro de la tolerancia.
    """
    tolerance = tolerance if tolerance is not None else settings.VERIFY_TOLERANCE
    found = {x.entries for x in search_result.dlmps}
    expected = {x.entries for x in oracle_result.minimal_vectors}
    missing = tuple(sorted(expected - found))
    extra = tuple(sorted(found - expected))
    delta = None
    if report is not None and oracle_result.reliability is not None:
        delta = abs(report.value - oracle_result.reliability)
    sets_equal = not missing and not extra
    passed = sets_equal and (delta is None or delta <= tolerance)
    if not passed:
        logger.warning(f"Verification failed: missing={list(missing)} extra={list(extra)} delta={delta}")
    return VerificationOutcome(
        sets_equal=sets_equal,
        missing=missing,
        extra=extra,
        reliability_delta=delta,
        passed=passed,
    )
