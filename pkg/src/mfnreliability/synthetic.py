"""
Redes aleatorias conexas para pruebas de propiedades y scripts.

Se usa un generador Faker con semilla para que cada red sea reproducible.
"""

from typing import TYPE_CHECKING, List

from .models.network import Arc, Network

if TYPE_CHECKING:
    from faker import Faker


def random_network(
    fake: "Faker",
    max_nodes: int = 5,
    max_arcs: int = 6,
    max_capacity: int = 2,
    max_length: int = 4,
) -> Network:
    """
    Genera una red con un camino fuente -> sumidero garantizado.

    Los nodos 1..n se encadenan (1 -> 2 -> ... -> n) y el resto de arcos se
    sortean entre pares distintos; uno de cada cuatro, aproximadamente, es no
    dirigido. La fuente es 1 y el sumidero n.

    Args:
        fake (Faker): Generador con semilla.
        max_nodes (int): Máximo de nodos (al menos 2).
        max_arcs (int): Máximo de arcos (al menos max_nodes - 1).
        max_capacity (int): Máximo de M_i.
        max_length (int): Máximo de l_i.

    Returns:
        Network: Red válida sin pmf.
    """
    if max_nodes < 2 or max_arcs < max_nodes - 1:
        raise ValueError("max_arcs must allow a chain through max_nodes nodes")
    n = fake.random_int(min=2, max=max_nodes)
    total = fake.random_int(min=n - 1, max=max_arcs)
    arcs: List[Arc] = []

    def add(tail: int, head: int, low_capacity: int) -> None:
        arcs.append(Arc(
            id=f"a{len(arcs) + 1}",
            tail=tail,
            head=head,
            undirected=fake.random_int(min=0, max=3) == 0,
            max_capacity=fake.random_int(min=low_capacity, max=max_capacity),
            length=fake.random_int(min=1, max=max_length),
        ))

    for v in range(1, n):
        add(v, v + 1, 1)
    while len(arcs) < total:
        tail = fake.random_int(min=1, max=n)
        head = fake.random_int(min=1, max=n)
        if tail != head:
            add(tail, head, 0)
    return Network(node_count=n, arcs=tuple(arcs), source=1, sink=n)
