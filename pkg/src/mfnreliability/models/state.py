"""
Vectores de estado y demanda para redes de flujo multiestado.

StateVector representa X = (x_1, ..., x_m), la capacidad actual de cada arco.
Demand agrupa el flujo requerido d y el límite de distancia λ.
"""

import math
from typing import Annotated, Any, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

INFINITY: float = math.inf


class StateVector(BaseModel):
    """
    Vector de estado del sistema (SSV).

    Atributos:
        entries (Tuple[int, ...]): Capacidad actual de cada arco, en el orden de la red.

    Si se valida con ``context={"max_capacity": M}`` se rechazan entradas mayores que M_i.
    """
    entries: Tuple[Annotated[int, Field(ge=0)], ...]

    model_config = ConfigDict(frozen=True)

    @field_validator("entries")
    @classmethod
    def _check_upper_bounds(cls, value: Tuple[int, ...], info: ValidationInfo) -> Tuple[int, ...]:
        context = info.context or {}
        bounds = context.get("max_capacity")
        if bounds is None:
            return value
        if len(bounds) != len(value):
            raise ValueError(f"state has {len(value)} entries, network has {len(bounds)} arcs")
        over = [i + 1 for i, (x, cap) in enumerate(zip(value, bounds)) if x > cap]
        if over:
            raise ValueError(f"entries exceed max capacity at arcs {over}")
        return value

    @classmethod
    def bounded(cls, entries: Sequence[int], max_capacity: Sequence[int]) -> "StateVector":
        """
        Construye un estado validando 0 <= x_i <= M_i.

        Args:
            entries (Sequence[int]): Capacidades por arco.
            max_capacity (Sequence[int]): Vector M de la red.

        Returns:
            StateVector: El estado validado.

        Raises:
            pydantic.ValidationError: Si alguna entrada es negativa o supera M_i.
        """
        return cls.model_validate(
            {"entries": tuple(entries)}, context={"max_capacity": tuple(max_capacity)}
        )

    @classmethod
    def zero(cls, m: int) -> "StateVector":
        return cls(entries=(0,) * m)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def dominates(self, other: "StateVector") -> bool:
        """True si self >= other componente a componente."""
        return all(a >= b for a, b in zip(self.entries, other.entries))

    def is_dominated_by(self, other: "StateVector") -> bool:
        """True si self <= other componente a componente."""
        return other.dominates(self)

    def minus_unit(self, index: int) -> "StateVector":
        """
        Devuelve X - e_i para un índice de arco 0-based.

        Raises:
            ValueError: Si x_i ya es 0.
        """
        if self.entries[index] == 0:
            raise ValueError(f"arc {index + 1} is already at capacity 0")
        values = list(self.entries)
        values[index] -= 1
        return StateVector(entries=tuple(values))

    def __repr__(self) -> str:
        return f"<StateVector{self.entries}>"


class Demand(BaseModel):
    """
    Demanda de flujo con límite de distancia de transmisión.

    Atributos:
        d (int): Unidades de flujo a transmitir.
        distance_limit (int | float): λ; ``INFINITY`` cuando no hay límite. Alias ``lambda``.
    """
    d: int = Field(..., ge=0)
    distance_limit: Union[int, float] = Field(default=INFINITY, alias="lambda")

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    @field_validator("distance_limit", mode="before")
    @classmethod
    def _parse_limit(cls, value: Any) -> Union[int, float]:
        if isinstance(value, str):
            if value.strip().lower() in {"inf", "infinity"}:
                return INFINITY
            value = int(value)
        if isinstance(value, float):
            if math.isinf(value) and value > 0:
                return INFINITY
            if not value.is_integer():
                raise ValueError("lambda must be an integer or 'inf'")
            value = int(value)
        if value < 0:
            raise ValueError("lambda must be non-negative")
        return value

    @property
    def is_unlimited(self) -> bool:
        return math.isinf(self.distance_limit)

    def limit_label(self) -> Union[int, str]:
        """Representación de λ para informes ('inf' o el entero)."""
        return "inf" if self.is_unlimited else int(self.distance_limit)
