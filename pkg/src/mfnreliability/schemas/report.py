"""
Esquema del informe JSON que emite la CLI.

Los índices de arcos y MPs son 1-based. Los campos ausentes (None) no se
serializan, de modo que cada subcomando solo emite lo que calcula.
"""

from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from ..graph.paths import PathSet, arcs_on_no_path, path_capacity
from ..models.network import Network
from ..models.state import Demand, StateVector
from ..oracle.brute_force import OracleResult, VerificationOutcome
from ..reliability.union import ReliabilityReport
from ..search.dlmp import DlmpResult


class PathRow(BaseModel):
    """
    Fila de la tabla de MPs.

    Atributos:
        index (int): j, 1-based.
        arcs (List[str]): Arcos en orden de recorrido; '~' marca sentido inverso.
        length (int): LP_j.
        capacity (int): CP_j(M).
    """
    index: int
    arcs: List[str]
    length: int
    capacity: int


class OracleSection(BaseModel):
    psi_count: int
    state_count: int
    minimal_vectors: List[List[int]]
    reliability: Optional[float] = None


class VerifySection(BaseModel):
    passed: bool
    sets_equal: bool
    missing: List[List[int]] = Field(default_factory=list)
    extra: List[List[int]] = Field(default_factory=list)
    reliability_delta: Optional[float] = None


class RunReport(BaseModel):
    """
    Informe de una ejecución de la CLI.

    Atributos:
        command (str): Subcomando ejecutado.
        network (str): Ruta o nombre de la fixture.
        d (Optional[int]): Demanda.
        distance_limit (Optional[Union[int, str]]): λ ("inf" sin límite). Alias ``lambda``.
        dlmps (Optional[List[List[int]]]): (d,λ)-MPs.
        sigma (Optional[int]): FFVs generados.
        rejected_cyclic (Optional[int]): FFVs rechazados por ciclo.
        duplicates (Optional[int]): FFVs con SSV ya aceptado.
        reliability (Optional[float]): R_(d,λ).
        elapsed_ms (Optional[float]): Tiempo de la búsqueda; se omite con ``--no-timing``.
    """
    command: str
    network: str
    d: Optional[int] = None
    distance_limit: Optional[Union[int, str]] = Field(default=None, alias="lambda")
    paths: Optional[List[PathRow]] = None
    arcs_on_no_path: Optional[List[str]] = None
    relevant: Optional[List[int]] = None
    irrelevant: Optional[List[int]] = None
    dlmps: Optional[List[List[int]]] = None
    sigma: Optional[int] = None
    rejected_cyclic: Optional[int] = None
    duplicates: Optional[int] = None
    recovered_cyclic: Optional[int] = None
    reliability: Optional[float] = None
    method: Optional[str] = None
    term_count: Optional[int] = None
    elapsed_ms: Optional[float] = None
    oracle: Optional[OracleSection] = None
    verify: Optional[VerifySection] = None

    model_config = ConfigDict(populate_by_name=True)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)


def _vectors(vectors: List[StateVector]) -> List[List[int]]:
    return [list(x.entries) for x in vectors]


def path_rows(network: Network, paths: PathSet) -> List[PathRow]:
    capacities = network.max_capacity
    return [
        PathRow(
            index=path.index,
            arcs=path.describe(network).split(),
            length=path.length,
            capacity=path_capacity(path, capacities),
        )
        for path in paths.paths
    ]


def build_report(
    command: str,
    network_name: str,
    network: Network,
    demand: Optional[Demand] = None,
    paths: Optional[PathSet] = None,
    result: Optional[DlmpResult] = None,
    reliability: Optional[ReliabilityReport] = None,
    oracle: Optional[OracleResult] = None,
    outcome: Optional[VerificationOutcome] = None,
    timing: bool = True,
) -> RunReport:
    """
    Reúne en un RunReport lo que cada subcomando haya calculado.

    Returns:
        RunReport: Informe listo para serializar o tabular.
    """
    report = RunReport(command=command, network=network_name)
    updates = {}
    if demand is not None:
        updates.update(d=demand.d, distance_limit=demand.limit_label())
    if paths is not None:
        updates.update(paths=path_rows(network, paths), arcs_on_no_path=arcs_on_no_path(network, paths))
    if result is not None:
        updates.update(
            relevant=list(result.relevant),
            irrelevant=list(result.irrelevant),
            dlmps=_vectors(list(result.dlmps)),
            sigma=result.sigma,
            rejected_cyclic=result.rejected_cyclic,
            duplicates=result.duplicate_count,
            recovered_cyclic=result.recovered_cyclic,
            elapsed_ms=round(result.elapsed_ms, 3) if timing else None,
        )
    if reliability is not None:
        updates.update(
            reliability=reliability.value,
            method=reliability.method,
            term_count=reliability.term_count,
        )
    if oracle is not None:
        updates["oracle"] = OracleSection(
            psi_count=oracle.psi_count,
            state_count=oracle.state_count,
            minimal_vectors=_vectors(list(oracle.minimal_vectors)),
            reliability=oracle.reliability,
        )
    if outcome is not None:
        updates["verify"] = VerifySection(
            passed=outcome.passed,
            sets_equal=outcome.sets_equal,
            missing=[list(x) for x in outcome.missing],
            extra=[list(x) for x in outcome.extra],
            reliability_delta=outcome.reliability_delta,
        )
    return report.model_copy(update=updates)
