"""
Enumeration of distance-feasible d-FFVs.

Solves the bounded system over path flows F = (f_1, ..., f_p):

    (i)   f_j = 0 when LP_j > λ
    (ii)  f_1 + ... + f_p = d
    (iii) 0 <= f_j <= min{CP_j(C), d}
    (iv)  sum of f_j over paths through a_i <= c_i for every arc

where C is the capacity vector (M for the search, any state X for the
oracle). Solutions are produced depth-first in lexicographically increasing
order.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import chain
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict

from ..graph.paths import PathSet, classify_relevant, path_capacity
from ..models.network import Network
from ..models.state import Demand, StateVector

logger = logging.getLogger(__name__)

FlowTuple = Tuple[int, ...]


class FlowVector(BaseModel):
    """
    Feasible flow vector F = (f_1, ..., f_p), flow units per MP.
    """
    flows: Tuple[int, ...]

    model_config = ConfigDict(frozen=True)

    def positive_paths(self) -> Tuple[int, ...]:
        """Positions (0-based) of the paths carrying flow."""
        return tuple(j for j, f in enumerate(self.flows) if f > 0)

    def __repr__(self) -> str:
        return f"<FlowVector{self.flows}>"


class SolverBounds(BaseModel):
    """
    Bounds of the system for one (network, demand, capacities) triple.

    Attributes:
        upper (Tuple[int, ...]): u_j = min{CP_j(C), d}, 0 for forced-zero paths.
        budgets (Tuple[int, ...]): Per-arc budgets c_i.
        forced_zero (Tuple[int, ...]): Positions with LP_j > λ.
        path_arcs (Tuple[Tuple[int, ...], ...]): Arc indices of every path.
        demand (int): d.
    """
    upper: Tuple[int, ...]
    budgets: Tuple[int, ...]
    forced_zero: Tuple[int, ...]
    path_arcs: Tuple[Tuple[int, ...], ...]
    demand: int

    model_config = ConfigDict(frozen=True)

    @classmethod
    def build(
        cls,
        paths: PathSet,
        demand: Demand,
        capacities: Sequence[int],
    ) -> "SolverBounds":
        """
        Step 0: path capacities are computed only for relevant paths.

        Args:
            paths (PathSet): Minimal paths.
            demand (Demand): d and λ.
            capacities (Sequence[int]): Arc capacity vector C.

        Returns:
            SolverBounds: Bounds ready for enumeration.
        """
        split = classify_relevant(paths, demand.distance_limit)
        forced = set(split.irrelevant)
        upper = tuple(
            0 if j in forced else min(path_capacity(path, capacities), demand.d)
            for j, path in enumerate(paths.paths)
        )
        return cls(
            upper=upper,
            budgets=tuple(capacities),
            forced_zero=split.irrelevant,
            path_arcs=paths.path_arcs(),
            demand=demand.d,
        )

    @property
    def first_free(self) -> Optional[int]:
        """Position of the first variable that is not forced to zero."""
        for j, u in enumerate(self.upper):
            if u > 0:
                return j
        return None


def _search(
    bounds: SolverBounds,
    start: int,
    remaining: int,
    residual: List[int],
    prefix: List[int],
    check_arc_budgets: bool,
) -> Iterator[FlowTuple]:
    upper = bounds.upper
    path_arcs = bounds.path_arcs
    p = len(upper)
    rest = [0] * (p + 1)
    for j in range(p - 1, -1, -1):
        rest[j] = rest[j + 1] + upper[j]
    flows = list(prefix) + [0] * (p - len(prefix))

    def assign(j: int, left: int) -> Iterator[FlowTuple]:
        if j == p:
            if left == 0:
                yield tuple(flows)
            return
        if left > rest[j]:
            return
        high = min(upper[j], left)
        if check_arc_budgets:
            for i in path_arcs[j]:
                if residual[i] < high:
                    high = residual[i]
        low = max(0, left - rest[j + 1])
        for value in range(low, high + 1):
            flows[j] = value
            if value:
                for i in path_arcs[j]:
                    residual[i] -= value
            yield from assign(j + 1, left - value)
            if value:
                for i in path_arcs[j]:
                    residual[i] += value
        flows[j] = 0

    yield from assign(start, remaining)


def iter_flow_tuples(
    bounds: SolverBounds,
    first_only: bool = False,
    workers: int = 1,
    check_arc_budgets: bool = True,
) -> Iterator[FlowTuple]:
    """
    Raw enumeration of the system as integer tuples.

    With ``workers > 1`` the search is partitioned on the value of the first
    unforced variable; partitions are merged in value order, so the output is
    identical to the sequential enumeration.

    Args:
        bounds (SolverBounds): System bounds.
        first_only (bool): Stop after the first solution (feasibility test).
        workers (int): Number of worker threads.
        check_arc_budgets (bool): Enforce constraint (iv).

    Yields:
        Tuple[int, ...]: Solutions in lexicographically increasing order.
    """
    p = len(bounds.upper)
    budgets = list(bounds.budgets)
    pivot = bounds.first_free
    if first_only or workers <= 1 or pivot is None:
        iterator = _search(bounds, 0, bounds.demand, budgets, [], check_arc_budgets)
        if first_only:
            first = next(iterator, None)
            if first is not None:
                yield first
            return
        yield from iterator
        return

    high = min(bounds.upper[pivot], bounds.demand)
    if check_arc_budgets:
        high = min([high] + [bounds.budgets[i] for i in bounds.path_arcs[pivot]])

    def partition(value: int) -> List[FlowTuple]:
        residual = list(bounds.budgets)
        if value:
            for i in bounds.path_arcs[pivot]:
                residual[i] -= value
        prefix = [0] * pivot + [value]
        return list(_search(bounds, pivot + 1, bounds.demand - value, residual, prefix, check_arc_budgets))

    with ThreadPoolExecutor(max_workers=workers) as executor:
        parts = list(executor.map(partition, range(0, high + 1)))
    logger.debug(f"Merged {len(parts)} partitions of {p} flow variables.")
    yield from chain.from_iterable(parts)


def enumerate_ffvs(
    network: Network,
    paths: PathSet,
    demand: Demand,
    capacities: Optional[Union[StateVector, Sequence[int]]] = None,
    first_only: bool = False,
    workers: int = 1,
    check_arc_budgets: bool = True,
) -> Iterator[FlowVector]:
    """
    Enumerates every d-FFV that satisfies the distance-limited system.

    Args:
        network (Network): Network the paths belong to.
        paths (PathSet): Minimal paths.
        demand (Demand): d and λ.
        capacities (Optional[Union[StateVector, Sequence[int]]]): Arc capacities; M when omitted.
        first_only (bool): Early-exit mode, at most one solution.
        workers (int): Worker threads for partitioned enumeration.
        check_arc_budgets (bool): Enforce the per-arc constraint (iv).

    Yields:
        FlowVector: Solutions in lexicographic order; nothing when infeasible.
    """
    bounds = SolverBounds.build(paths, demand, _capacity_entries(network, capacities))
    for flows in iter_flow_tuples(bounds, first_only, workers, check_arc_budgets):
        yield FlowVector(flows=flows)


def count_ffvs(
    network: Network,
    paths: PathSet,
    demand: Demand,
    capacities: Optional[Union[StateVector, Sequence[int]]] = None,
    check_arc_budgets: bool = True,
) -> int:
    bounds = SolverBounds.build(paths, demand, _capacity_entries(network, capacities))
    return sum(1 for _ in iter_flow_tuples(bounds, check_arc_budgets=check_arc_budgets))


def satisfies_system(
    flow: Union[FlowVector, Sequence[int]],
    network: Network,
    paths: PathSet,
    demand: Demand,
    capacities: Optional[Union[StateVector, Sequence[int]]] = None,
) -> bool:
    """
    Checks the four constraints by direct substitution.

    Returns:
        bool: True when F satisfies (i) to (iv) for the given capacities.
    """
    flows = flow.flows if isinstance(flow, FlowVector) else tuple(flow)
    caps = _capacity_entries(network, capacities)
    if len(flows) != paths.p or any(f < 0 for f in flows):
        return False
    if any(flows[j] for j, path in enumerate(paths.paths) if path.length > demand.distance_limit):
        return False
    if sum(flows) != demand.d:
        return False
    if any(f > min(path_capacity(path, caps), demand.d) for f, path in zip(flows, paths.paths)):
        return False
    return all(
        sum(flows[j] for j in users) <= caps[i]
        for i, users in enumerate(paths.arc_incidence)
    )


def _capacity_entries(
    network: Network,
    capacities: Optional[Union[StateVector, Sequence[int]]],
) -> Tuple[int, ...]:
    if capacities is None:
        return network.max_capacity
    if isinstance(capacities, StateVector):
        return capacities.entries
    return tuple(capacities)
