"""
Búsqueda de todos los (d,λ)-MPs.

Pipeline completo: clasificación de MPs por λ y capacidades de camino,
enumeración de los d-FFVs del sistema acotado, transformación a SSV, filtro
de ciclos dirigidos y eliminación de duplicados con un conjunto hash.

Un SSV se acepta si alguno de los FFVs que lo generan produce una orientación
acíclica. Los candidatos que solo aparecen con orientaciones cíclicas se
revisan de forma exacta (``RECHECK_CYCLIC``): se aceptan si ningún X - e_i
admite la demanda dentro del límite de distancia.
"""

import logging
import time
from typing import Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from ..core.config import settings
from ..flows.solver import FlowVector, enumerate_ffvs
from ..flows.transform import ffv_to_ssv, transmission_distance
from ..graph.maxflow import max_flow
from ..graph.paths import PathSet, arcs_on_no_path, classify_relevant, enumerate_mps
from ..models.network import Network
from ..models.state import INFINITY, Demand, StateVector

logger = logging.getLogger(__name__)


class CandidateRecord(BaseModel):
    """
    Candidato a (d,λ)-MP y los FFVs que lo generan.

    Atributos:
        ssv (StateVector): Vector de estado candidato.
        generating_ffvs (List[FlowVector]): Todos los FFVs cuyo SSV es ``ssv``.
        accepted (bool): Si el candidato forma parte del resultado.
    """
    ssv: StateVector
    generating_ffvs: List[FlowVector] = Field(default_factory=list)
    accepted: bool = False


class DlmpResult(BaseModel):
    """
    Resultado de find_dlmps.

    Atributos:
        dlmps (Tuple[StateVector, ...]): (d,λ)-MPs en orden lexicográfico, sin duplicados.
        sigma (int): Número de FFVs generados, duplicados incluidos.
        rejected_cyclic (int): FFVs descartados por orientación cíclica.
        duplicate_count (int): FFVs válidos cuyo SSV ya estaba aceptado.
        candidate_count (int): SSVs distintos generados.
        recovered_cyclic (int): Candidatos solo cíclicos aceptados por la revisión exacta.
        recovered (Tuple[StateVector, ...]): Esos mismos candidatos.
        relevant (Tuple[int, ...]): Índices 1-based de los MPs con LP_j <= λ.
        irrelevant (Tuple[int, ...]): Índices 1-based de los MPs con LP_j > λ.
        paths (PathSet): Caminos mínimos usados.
        demand (Demand): Demanda evaluada.
        elapsed_ms (float): Tiempo de la búsqueda en milisegundos.
    """
    dlmps: Tuple[StateVector, ...]
    sigma: int
    rejected_cyclic: int
    duplicate_count: int
    candidate_count: int
    recovered_cyclic: int = 0
    recovered: Tuple[StateVector, ...] = ()
    relevant: Tuple[int, ...]
    irrelevant: Tuple[int, ...]
    paths: PathSet
    demand: Demand
    elapsed_ms: float

    model_config = ConfigDict(frozen=True)

    def as_tuples(self) -> List[Tuple[int, ...]]:
        return [x.entries for x in self.dlmps]


def cycle_check(
    network: Network,
    paths: PathSet,
    candidate: CandidateRecord,
    flow: FlowVector,
) -> bool:
    """
    Comprueba si la orientación inducida por un FFV está libre de ciclos dirigidos.

    El subgrafo contiene, para cada arco con x_i > 0, el sentido en que lo
    recorren los caminos con flujo positivo. Un arco no dirigido usado en ambos
    sentidos aporta las dos aristas.

    Args:
        network (Network): Red.
        paths (PathSet): Caminos mínimos que indexan el flujo.
        candidate (CandidateRecord): Candidato generado por ``flow``.
        flow (FlowVector): FFV generador.

    Returns:
        bool: True si no hay ciclo dirigido (se acepta).
    """
    entries = candidate.ssv.entries
    graph = nx.DiGraph()
    for j in flow.positive_paths():
        for step in paths.paths[j].steps:
            if entries[step.arc] <= 0:
                continue
            graph.add_edge(*network.arcs[step.arc].endpoints(step.reverse))
    return nx.is_directed_acyclic_graph(graph)


def verify_real_dlmp(network: Network, ssv: StateVector, d: int) -> bool:
    """
    Comprobación independiente por flujo máximo: V(X) = d y V(X - e_i) < d
    para todo arco con x_i > 0.
    """
    if max_flow(network, ssv) != d:
        return False
    for i, x in enumerate(ssv.entries):
        if x > 0 and max_flow(network, ssv.minus_unit(i)) >= d:
            return False
    return True


def _is_minimal(network: Network, paths: PathSet, demand: Demand, ssv: StateVector) -> bool:
    for i, x in enumerate(ssv.entries):
        if x == 0:
            continue
        reduced = ssv.minus_unit(i)
        if next(enumerate_ffvs(network, paths, demand, capacities=reduced, first_only=True), None) is not None:
            return False
    return True


def find_dlmps(
    network: Network,
    demand: Demand,
    paths: Optional[PathSet] = None,
    workers: Optional[int] = None,
    recheck_cyclic: Optional[bool] = None,
) -> DlmpResult:
    """
    Enumera todos los (d,λ)-MPs de la red.

    Args:
        network (Network): Red validada.
        demand (Demand): Demanda d y límite λ.
        paths (Optional[PathSet]): MPs ya enumerados; se calculan si se omiten.
        workers (Optional[int]): Hilos para la enumeración de FFVs (``settings.worker_count`` por defecto).
        recheck_cyclic (Optional[bool]): Revisión exacta de candidatos solo cíclicos (``settings.RECHECK_CYCLIC`` por defecto).

    Returns:
        DlmpResult: Conjunto de (d,λ)-MPs y contadores.
    """
    started = time.perf_counter()
    if paths is None:
        paths = enumerate_mps(network)
    if workers is None:
        workers = settings.worker_count
    if recheck_cyclic is None:
        recheck_cyclic = settings.RECHECK_CYCLIC

    orphans = arcs_on_no_path(network, paths)
    if orphans:
        logger.warning(f"Arcs {orphans} lie on no minimal path; they never carry flow.")
    split = classify_relevant(paths, demand.distance_limit)
    logger.info(
        f"{len(split.relevant)} relevant and {len(split.irrelevant)} irrelevant minimal paths "
        f"for d={demand.d}, lambda={demand.limit_label()}."
    )

    records: Dict[Tuple[int, ...], CandidateRecord] = {}
    sigma = 0
    rejected = 0
    duplicates = 0
    for flow in enumerate_ffvs(network, paths, demand, workers=workers):
        sigma += 1
        ssv = ffv_to_ssv(flow, paths)
        if demand.d > 0 and transmission_distance(flow, paths) > demand.distance_limit:
            logger.debug(f"{flow!r} exceeds the distance limit.")
            continue
        record = records.get(ssv.entries)
        if record is None:
            record = CandidateRecord(ssv=ssv)
            records[ssv.entries] = record
        record.generating_ffvs.append(flow)
        if record.accepted:
            duplicates += 1
            continue
        if cycle_check(network, paths, record, flow):
            record.accepted = True
        else:
            rejected += 1
            logger.debug(f"{ssv!r} rejected: {flow!r} induces a directed cycle.")

    recovered: List[StateVector] = []
    if recheck_cyclic:
        for record in records.values():
            if not record.accepted and _is_minimal(network, paths, demand, record.ssv):
                record.accepted = True
                recovered.append(record.ssv)
        if recovered:
            logger.info(f"{len(recovered)} cyclic-only candidates are minimal under the distance limit.")

    dlmps = sorted((r.ssv for r in records.values() if r.accepted), key=lambda x: x.entries)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    logger.info(
        f"sigma={sigma}, accepted={len(dlmps)}, rejected_cyclic={rejected}, duplicates={duplicates}."
    )
    return DlmpResult(
        dlmps=tuple(dlmps),
        sigma=sigma,
        rejected_cyclic=rejected,
        duplicate_count=duplicates,
        candidate_count=len(records),
        recovered_cyclic=len(recovered),
        recovered=tuple(sorted(recovered, key=lambda x: x.entries)),
        relevant=tuple(j + 1 for j in split.relevant),
        irrelevant=tuple(j + 1 for j in split.irrelevant),
        paths=paths,
        demand=demand,
        elapsed_ms=elapsed_ms,
    )


def classical_dmps(network: Network, d: int, paths: Optional[PathSet] = None) -> DlmpResult:
    """
    d-MPs sin límite de distancia, aceptados solo por el filtro de ciclos.
    """
    return find_dlmps(network, Demand(d=d, distance_limit=INFINITY), paths=paths, recheck_cyclic=False)


def is_antichain(vectors: List[StateVector]) -> bool:
    """True si ningún vector domina a otro distinto."""
    for a in vectors:
        for b in vectors:
            if a.entries != b.entries and a.dominates(b):
                return False
    return True
