"""
Modelos de dominio para la red de flujo multiestado G(N, A, M, L).

Define Arc y Network como modelos Pydantic inmutables. Toda la validación
estructural (auto-lazos, índices de nodos, distribución de capacidad) ocurre
en la construcción, de modo que el resto del paquete puede asumir una red
válida.
"""

from typing import List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..core.config import settings
from .state import StateVector


class Arc(BaseModel):
    """
    Arco de la red.

    Atributos:
        id (str): Etiqueta del arco (p. ej. "a1").
        tail (int): Nodo de origen (o primer extremo si es no dirigido).
        head (int): Nodo de destino (o segundo extremo).
        undirected (bool): Si puede recorrerse en ambos sentidos con una única capacidad.
        max_capacity (int): Capacidad máxima M_i.
        length (int): Longitud l_i, estrictamente positiva.
        pmf (Optional[Tuple[float, ...]]): Distribución de capacidad indexada 0..M_i.
    """
    id: str = Field(..., min_length=1)
    tail: int = Field(..., ge=1)
    head: int = Field(..., ge=1)
    undirected: bool = False
    max_capacity: int = Field(..., ge=0)
    length: int = Field(..., gt=0)
    pmf: Optional[Tuple[float, ...]] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_arc(self) -> "Arc":
        if self.tail == self.head:
            raise ValueError(f"arc {self.id} is a self-loop on node {self.tail}")
        if self.pmf is not None:
            if len(self.pmf) != self.max_capacity + 1:
                raise ValueError(
                    f"arc {self.id} pmf has {len(self.pmf)} entries, expected {self.max_capacity + 1}"
                )
            if any(p < 0.0 or p > 1.0 for p in self.pmf):
                raise ValueError(f"arc {self.id} pmf entries must lie in [0, 1]")
            if abs(sum(self.pmf) - 1.0) > settings.PROBABILITY_TOLERANCE:
                raise ValueError(f"arc {self.id} pmf sums to {sum(self.pmf)!r}, not 1")
        return self

    def endpoints(self, reverse: bool = False) -> Tuple[int, int]:
        """
        Devuelve (origen, destino) según la orientación de recorrido.

        Args:
            reverse (bool): Recorrido en sentido head -> tail (solo arcos no dirigidos).

        Returns:
            Tuple[int, int]: Nodos de entrada y salida del paso.
        """
        if reverse:
            if not self.undirected:
                raise ValueError(f"arc {self.id} is directed and cannot be reversed")
            return self.head, self.tail
        return self.tail, self.head


class Network(BaseModel):
    """
    Red de flujo multiestado con nodos perfectos.

    Atributos:
        node_count (int): Número de nodos n; los nodos son 1..n.
        arcs (Tuple[Arc, ...]): Arcos en el orden que define los índices 1..m.
        source (int): Nodo fuente.
        sink (int): Nodo sumidero.
        declared_paths (Optional[Tuple[Tuple[str, ...], ...]]): MPs predeterminados,
            como secuencias de ids de arco, que fijan el orden P_1..P_p.
    """
    node_count: int = Field(..., ge=1)
    arcs: Tuple[Arc, ...]
    source: int
    sink: int
    declared_paths: Optional[Tuple[Tuple[str, ...], ...]] = None

    model_config = ConfigDict(frozen=True)

    @field_validator("arcs")
    @classmethod
    def _unique_ids(cls, arcs: Tuple[Arc, ...]) -> Tuple[Arc, ...]:
        seen: Set[str] = set()
        duplicated: List[str] = []
        for arc in arcs:
            if arc.id in seen:
                duplicated.append(arc.id)
            seen.add(arc.id)
        if duplicated:
            raise ValueError(f"duplicated arc ids: {duplicated}")
        return arcs

    @model_validator(mode="after")
    def _check_nodes(self) -> "Network":
        n = self.node_count
        if not (1 <= self.source <= n and 1 <= self.sink <= n):
            raise ValueError(f"source {self.source} and sink {self.sink} must lie in 1..{n}")
        if self.source == self.sink:
            raise ValueError("source and sink must be different nodes")
        bad = [a.id for a in self.arcs if a.tail > n or a.head > n]
        if bad:
            raise ValueError(f"arcs {bad} reference nodes outside 1..{n}")
        if self.declared_paths is not None:
            ids = {a.id for a in self.arcs}
            unknown = sorted({i for path in self.declared_paths for i in path} - ids)
            if unknown:
                raise ValueError(f"declared paths reference unknown arcs {unknown}")
        return self

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def max_capacity(self) -> Tuple[int, ...]:
        """Vector M = (M_1, ..., M_m)."""
        return tuple(a.max_capacity for a in self.arcs)

    @property
    def lengths(self) -> Tuple[int, ...]:
        """Vector L = (l_1, ..., l_m)."""
        return tuple(a.length for a in self.arcs)

    def arc_index(self, arc_id: str) -> int:
        """
        Índice 0-based de un arco por su id.

        Raises:
            KeyError: Si el id no existe.
        """
        for i, arc in enumerate(self.arcs):
            if arc.id == arc_id:
                return i
        raise KeyError(arc_id)

    def missing_pmfs(self) -> List[str]:
        return [a.id for a in self.arcs if a.pmf is None]

    def has_pmfs(self) -> bool:
        return not self.missing_pmfs()

    def state(self, entries: Sequence[int]) -> StateVector:
        """Construye un StateVector validado contra M."""
        return StateVector.bounded(entries, self.max_capacity)

    def max_state(self) -> StateVector:
        return StateVector(entries=self.max_capacity)

    def zero_state(self) -> StateVector:
        return StateVector.zero(self.m)

    def state_space_size(self) -> int:
        size = 1
        for cap in self.max_capacity:
            size *= cap + 1
        return size

    def with_uniform_pmfs(self, missing_only: bool = False) -> "Network":
        """
        Copia de la red con pmf_i[k] = 1/(M_i+1).

        Args:
            missing_only (bool): Solo completa los arcos que no tienen pmf.

        Returns:
            Network: Nueva red; la original no se modifica.
        """
        arcs = tuple(
            a if missing_only and a.pmf is not None
            else a.model_copy(update={"pmf": tuple([1.0 / (a.max_capacity + 1)] * (a.max_capacity + 1))})
            for a in self.arcs
        )
        return self.model_copy(update={"arcs": arcs})

    def __repr__(self) -> str:
        return f"<Network(n={self.node_count}, m={self.m}, source={self.source}, sink={self.sink})>"
