"""
Comprobación empírica del crecimiento del tiempo de búsqueda con σ.

Escala las capacidades de una topología fija, ejecuta find_dlmps para cada
factor y ajusta la pendiente de log(tiempo) frente a log(σ). Una pendiente
mayor que el umbral se registra como advertencia, no como fallo.

Uso:
    python scripts/complexity_sweep.py --network fig2 --factors 1 2 3 4 6 8
"""

import argparse
import logging
import sys

import pandas as pd

logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

try:
    from mfnreliability.schemas.network_file import load_network
    from mfnreliability.search.complexity import SLOPE_THRESHOLD, check_growth, complexity_sweep, loglog_slope
    from mfnreliability.models.state import Demand
except ImportError as e:
    logger.error(f"Error importando módulos: {e}.")
    logger.error("Asegúrate de haber ejecutado 'uv pip install -e .'")
    sys.exit(1)


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Empirical growth of find_dlmps time in sigma.")
    parser.add_argument("--network", default="fig2", help="Network file or bundled fixture name")
    parser.add_argument("--factors", type=int, nargs="+", default=[1, 2, 3, 4, 6, 8])
    parser.add_argument("--demand-ratio", type=float, default=0.5, help="d as a fraction of V(M)")
    parser.add_argument("--lambda", dest="distance_limit", default="inf")
    parser.add_argument("--threshold", type=float, default=SLOPE_THRESHOLD)
    return parser.parse_args()


if __name__ == "__main__":
    args = parse_args()
    network = load_network(args.network)
    limit = Demand(d=0, distance_limit=args.distance_limit).distance_limit
    points = complexity_sweep(network, args.factors, demand_ratio=args.demand_ratio, distance_limit=limit)
    frame = pd.DataFrame([p.model_dump() for p in points])
    print(frame.to_string(index=False))
    try:
        slope = loglog_slope(points)
    except ValueError as e:
        logger.error(f"No se puede ajustar la pendiente: {e}")
        sys.exit(1)
    print(f"log-log slope = {slope:.3f}")
    check_growth(points, threshold=args.threshold)
