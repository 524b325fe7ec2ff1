"""
Empirical complexity check of find_dlmps.

Runs the search on one topology with capacities scaled by increasing factors
and fits the slope of log(time) against log(σ). The expected growth is
linear in σ for a fixed topology, so slopes above the threshold are logged
as a warning only.
"""

import logging
from typing import List, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..graph.maxflow import max_flow
from ..graph.paths import enumerate_mps
from ..models.network import Network
from ..models.state import INFINITY, Demand
from .dlmp import find_dlmps

logger = logging.getLogger(__name__)

SLOPE_THRESHOLD = 1.5


class SweepPoint(BaseModel):
    factor: int
    d: int
    sigma: int
    dlmp_count: int
    elapsed_ms: float

    model_config = ConfigDict(frozen=True)


def scale_capacities(network: Network, factor: int) -> Network:
    """
    Copy of the network with every M_i multiplied by ``factor``.

    Capacity distributions are dropped because their length depends on M_i.
    """
    if factor < 1:
        raise ValueError(f"scale factor must be at least 1, got {factor}")
    arcs = tuple(
        arc.model_copy(update={"max_capacity": arc.max_capacity * factor, "pmf": None})
        for arc in network.arcs
    )
    return network.model_copy(update={"arcs": arcs})


def complexity_sweep(
    network: Network,
    factors: Sequence[int],
    demand_ratio: float = 0.5,
    distance_limit: float = INFINITY,
    workers: int = 1,
) -> List[SweepPoint]:
    """
    Runs find_dlmps once per scale factor.

    Args:
        network (Network): Base topology.
        factors (Sequence[int]): Capacity scale factors.
        demand_ratio (float): d as a fraction of V(M) of the scaled network.
        distance_limit (float): λ used for every run.
        workers (int): Worker threads for FFV enumeration.

    Returns:
        List[SweepPoint]: One point per factor, in the given order.
    """
    paths = enumerate_mps(network)
    points = []
    for factor in factors:
        scaled = scale_capacities(network, factor)
        d = max(1, int(max_flow(scaled, scaled.max_state()) * demand_ratio))
        result = find_dlmps(
            scaled,
            Demand(d=d, distance_limit=distance_limit),
            paths=paths,
            workers=workers,
        )
        points.append(SweepPoint(
            factor=factor,
            d=d,
            sigma=result.sigma,
            dlmp_count=len(result.dlmps),
            elapsed_ms=result.elapsed_ms,
        ))
        logger.info(f"factor={factor} d={d} sigma={result.sigma} elapsed={result.elapsed_ms:.2f} ms")
    return points


def loglog_slope(points: Sequence[SweepPoint]) -> float:
    """
    Least-squares slope of log(elapsed) against log(σ).

    Raises:
        ValueError: With fewer than two usable points.
    """
    usable = [p for p in points if p.sigma > 0 and p.elapsed_ms > 0]
    if len({p.sigma for p in usable}) < 2:
        raise ValueError("at least two points with distinct positive sigma are required")
    x = np.log([p.sigma for p in usable])
    y = np.log([p.elapsed_ms for p in usable])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def check_growth(points: Sequence[SweepPoint], threshold: float = SLOPE_THRESHOLD) -> bool:
    slope = loglog_slope(points)
    if slope > threshold:
        logger.warning(f"find_dlmps time grows with slope {slope:.2f} in sigma (threshold {threshold}).")
        return False
    logger.info(f"find_dlmps time grows with slope {slope:.2f} in sigma.")
    return True
