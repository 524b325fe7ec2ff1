"""
Script para generar redes de flujo multiestado aleatorias.

Escribe documentos JSON en el formato que acepta la CLI (``--network``),
con distribuciones de capacidad uniformes opcionales. Las redes son conexas
(existe al menos un camino de la fuente al sumidero) y reproducibles a partir
de la semilla.

Uso:
    python scripts/generate_random_networks.py --count 20 --output-dir redes/ --seed 7
"""

import argparse
import logging
import sys
from pathlib import Path

from faker import Faker

logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

try:
    from mfnreliability.schemas.network_file import serialize_network
    from mfnreliability.synthetic import random_network
    logger.info("Módulos del proyecto importados correctamente.")
except ImportError as e:
    logger.error(f"Error importando módulos: {e}.")
    logger.error("Asegúrate de haber ejecutado 'uv pip install -e .'")
    sys.exit(1)


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Generate random connected multistate flow networks.")
    parser.add_argument("--count", type=int, default=10, help="Number of networks")
    parser.add_argument("--output-dir", type=Path, default=Path("networks"), help="Destination directory")
    parser.add_argument("--seed", type=int, default=0, help="Faker seed")
    parser.add_argument("--max-nodes", type=int, default=6)
    parser.add_argument("--max-arcs", type=int, default=8)
    parser.add_argument("--max-capacity", type=int, default=3)
    parser.add_argument("--max-length", type=int, default=4)
    parser.add_argument("--uniform-pmf", action="store_true", help="Attach uniform capacity distributions")
    return parser.parse_args()


def generate_networks(args: argparse.Namespace) -> int:
    """
    Genera y escribe las redes.

    Args:
        args (argparse.Namespace): Parámetros de la línea de comandos.

    Returns:
        int: Número de archivos escritos.
    """
    fake = Faker()
    fake.seed_instance(args.seed)
    args.output_dir.mkdir(parents=True, exist_ok=True)
    written = 0
    for k in range(1, args.count + 1):
        network = random_network(
            fake,
            max_nodes=args.max_nodes,
            max_arcs=args.max_arcs,
            max_capacity=args.max_capacity,
            max_length=args.max_length,
        )
        if args.uniform_pmf:
            network = network.with_uniform_pmfs()
        target = args.output_dir / f"network_{k:03d}.json"
        target.write_text(serialize_network(network) + "\n", encoding="utf-8")
        written += 1
        logger.info(f"  ({k}/{args.count}) {target}: {network.node_count} nodos, {network.m} arcos")
    return written


if __name__ == "__main__":
    arguments = parse_args()
    total = generate_networks(arguments)
    logger.info(f"Se escribieron {total} redes en {arguments.output_dir}.")
