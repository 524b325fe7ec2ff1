"""
Excepciones del dominio para mfnreliability.

Todas derivan de MFNError para que la CLI pueda traducirlas a códigos de
salida sin capturar errores de programación genéricos.
"""

from typing import Iterable, Optional


class MFNError(Exception):
    """Base de todas las excepciones del paquete."""


class NetworkSyntaxError(MFNError):
    """El documento de red no es JSON válido o no tiene la forma esperada."""


class NetworkValidationError(MFNError):
    """
    Violación de un invariante de la red.

    Atributos:
        arcs (List[str]): Identificadores de los arcos implicados.
        nodes (List[int]): Nodos implicados.
    """

    def __init__(
        self,
        message: str,
        arcs: Optional[Iterable[str]] = None,
        nodes: Optional[Iterable[int]] = None,
    ) -> None:
        self.arcs = list(arcs or [])
        self.nodes = list(nodes or [])
        details = []
        if self.arcs:
            details.append(f"arcs={self.arcs}")
        if self.nodes:
            details.append(f"nodes={self.nodes}")
        suffix = f" ({', '.join(details)})" if details else ""
        super().__init__(f"{message}{suffix}")


class MissingPMFError(MFNError):
    """Se pidió una probabilidad sobre un arco sin distribución de capacidad."""

    def __init__(self, arc_ids: Iterable[str]) -> None:
        self.arcs = list(arc_ids)
        super().__init__(f"Arcs without capacity distribution: {self.arcs}")


class UndefinedDistanceError(MFNError):
    """La distancia de transmisión no está definida para el flujo nulo."""


class GuardExceededError(MFNError):
    """El número de (d,λ)-MPs supera el límite de inclusión-exclusión."""

    def __init__(self, count: int, guard: int) -> None:
        self.count = count
        self.guard = guard
        super().__init__(
            f"{count} minimal vectors exceed the inclusion-exclusion guard of {guard}"
        )


class StateLimitExceededError(MFNError):
    """El espacio de estados es demasiado grande para el oráculo."""

    def __init__(self, size: int, limit: int) -> None:
        self.size = size
        self.limit = limit
        super().__init__(f"State space of {size} states exceeds the limit of {limit}")
