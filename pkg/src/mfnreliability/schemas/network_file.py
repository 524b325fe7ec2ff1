"""
Esquemas Pydantic para el formato de archivo de red (JSON).

Define el documento de entrada/salida y las funciones de parseo y
serialización. El esquema valida la forma del documento; los invariantes de
la red se validan al construir el modelo de dominio Network.
"""

import logging
from importlib import resources
from pathlib import Path
from typing import IO, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..core.exceptions import NetworkSyntaxError, NetworkValidationError
from ..models.network import Arc, Network

logger = logging.getLogger(__name__)

FIXTURES_PACKAGE = "mfnreliability.fixtures"
FIXTURE_FILES = {
    "example1": "example1.json",
    "fig2": "fig2.json",
    "fixtureA": "example1.json",
    "fixtureB": "fig2.json",
}


class ArcDocument(BaseModel):
    """
    Esquema de un arco en el documento.

    Atributos:
        id (str): Etiqueta del arco.
        tail (int): Primer extremo.
        head (int): Segundo extremo.
        undirected (bool): Arco no dirigido.
        max_capacity (int): Capacidad máxima.
        length (int): Longitud.
        pmf (Optional[List[float]]): Distribución de capacidad opcional.
    """
    id: str
    tail: int
    head: int
    undirected: bool = False
    max_capacity: int
    length: int
    pmf: Optional[List[float]] = None

    model_config = ConfigDict(extra="forbid")


class NetworkDocument(BaseModel):
    """
    Esquema del documento de red completo.

    Atributos:
        nodes (int): Número de nodos.
        source (int): Nodo fuente.
        sink (int): Nodo sumidero.
        arcs (List[ArcDocument]): Arcos en orden de índice.
        paths (Optional[List[List[str]]]): MPs predeterminados opcionales.
    """
    nodes: int
    source: int
    sink: int
    arcs: List[ArcDocument] = Field(default_factory=list)
    paths: Optional[List[List[str]]] = None

    model_config = ConfigDict(extra="forbid")

    def to_network(self) -> Network:
        """
        Construye el modelo de dominio, traduciendo errores de validación.

        Returns:
            Network: Red validada.

        Raises:
            NetworkValidationError: Si se viola algún invariante.
        """
        try:
            arcs = tuple(Arc(**arc.model_dump()) for arc in self.arcs)
        except ValidationError as e:
            raise NetworkValidationError(_first_message(e), arcs=_failing_arcs(self)) from e
        declared = tuple(tuple(p) for p in self.paths) if self.paths is not None else None
        try:
            return Network(
                node_count=self.nodes,
                arcs=arcs,
                source=self.source,
                sink=self.sink,
                declared_paths=declared,
            )
        except ValidationError as e:
            nodes = [n for n in (self.source, self.sink) if not 1 <= n <= self.nodes]
            raise NetworkValidationError(_first_message(e), nodes=nodes) from e

    @classmethod
    def from_network(cls, network: Network) -> "NetworkDocument":
        return cls(
            nodes=network.node_count,
            source=network.source,
            sink=network.sink,
            arcs=[ArcDocument(**arc.model_dump()) for arc in network.arcs],
            paths=[list(p) for p in network.declared_paths] if network.declared_paths is not None else None,
        )


def _first_message(error: ValidationError) -> str:
    details = error.errors()
    if not details:
        return str(error)
    return str(details[0].get("msg", error))


def _failing_arcs(document: NetworkDocument) -> List[str]:
    # Arc(...) se construye uno por uno, así que basta con revalidar para localizar el fallo.
    failing = []
    for arc in document.arcs:
        try:
            Arc(**arc.model_dump())
        except ValidationError:
            failing.append(arc.id)
    return failing


def parse_network(text: Union[str, bytes, IO[str]]) -> Network:
    """
    Parsea un documento de red JSON.

    Args:
        text (Union[str, bytes, IO[str]]): Contenido del documento o flujo de caracteres.

    Returns:
        Network: Red validada; el orden de los arcos define los índices 1..m.

    Raises:
        NetworkSyntaxError: Si el documento está mal formado.
        NetworkValidationError: Si la red viola algún invariante.
    """
    if hasattr(text, "read"):
        text = text.read()
    try:
        document = NetworkDocument.model_validate_json(text)
    except ValidationError as e:
        raise NetworkSyntaxError(f"Malformed network document: {_first_message(e)}") from e
    network = document.to_network()
    logger.info(f"Parsed network with {network.node_count} nodes and {network.m} arcs.")
    return network


def serialize_network(network: Network) -> str:
    """
    Serializa una red al mismo formato JSON que acepta parse_network.

    Returns:
        str: Documento JSON con sangría de 2 espacios.
    """
    return NetworkDocument.from_network(network).model_dump_json(indent=2, exclude_none=True)


def load_network(path: Union[str, Path]) -> Network:
    """
    Lee una red desde un archivo o desde el nombre de una fixture incluida.

    Args:
        path (Union[str, Path]): Ruta del archivo, o el nombre de una fixture ("example1", "fig2", "fixtureA", "fixtureB").

    Returns:
        Network: Red validada.

    Raises:
        OSError: Si el archivo no se puede leer.
        NetworkSyntaxError: Si el archivo no es UTF-8 o el documento está mal formado.
    """
    if str(path) in FIXTURE_FILES:
        return load_fixture(str(path))
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except UnicodeDecodeError as e:
        raise NetworkSyntaxError(f"Network file {path} is not valid UTF-8: {e}") from e
    return parse_network(text)


def load_fixture(name: str) -> Network:
    """
    Carga una de las redes de referencia incluidas en el paquete.

    Raises:
        KeyError: Si el nombre no corresponde a ninguna fixture.
    """
    filename = FIXTURE_FILES[name]
    text = resources.files(FIXTURES_PACKAGE).joinpath(filename).read_text(encoding="utf-8")
    return parse_network(text)
