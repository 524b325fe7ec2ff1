# tests/flows/test_solver.py
import pytest

from mfnreliability.flows.solver import (
    FlowVector,
    SolverBounds,
    count_ffvs,
    enumerate_ffvs,
    satisfies_system,
)
from mfnreliability.flows.transform import ffv_to_ssv, transmission_distance
from mfnreliability.graph.maxflow import max_flow
from mfnreliability.models.state import INFINITY, Demand

FIXTURE_A_FFVS = {
    (2, 2, 0, 1, 0, 0, 1, 0, 0),
    (1, 2, 1, 1, 0, 0, 1, 0, 0),
    (2, 2, 1, 0, 0, 0, 1, 0, 0),
    (2, 1, 1, 1, 0, 0, 1, 0, 0),
    (2, 2, 2, 0, 0, 0, 0, 0, 0),
    (2, 2, 1, 1, 0, 0, 0, 0, 0),
}

def test_fixture_a_six_solutions(fixture_a, paths_a):
    """Test the d=6, lambda=6 system of Fixture A has exactly six solutions."""
    flows = [f.flows for f in enumerate_ffvs(fixture_a, paths_a, Demand(d=6, distance_limit=6))]
    assert len(flows) == 6
    assert set(flows) == FIXTURE_A_FFVS

def test_emission_order_is_lexicographic(fixture_b, paths_b):
    """Test that solutions come out in increasing lexicographic order."""
    flows = [f.flows for f in enumerate_ffvs(fixture_b, paths_b, Demand(d=4))]
    assert flows == sorted(flows)
    assert len(set(flows)) == len(flows)

def test_fixture_b_solution_counts(fixture_b, paths_b):
    """Test 61 solutions with arc budgets and 67 with path bounds only."""
    demand = Demand(d=4, distance_limit=INFINITY)
    assert count_ffvs(fixture_b, paths_b, demand) == 61
    assert count_ffvs(fixture_b, paths_b, demand, check_arc_budgets=False) == 67

def test_counts_shrink_with_lambda(fixture_b, paths_b):
    """Test that tightening lambda never adds solutions."""
    counts = [count_ffvs(fixture_b, paths_b, Demand(d=4, distance_limit=limit))
              for limit in (INFINITY, 6, 4, 3, 2)]
    assert counts == sorted(counts, reverse=True)
    assert counts[-1] == 0

def test_zero_demand_single_solution(fixture_a, paths_a):
    """Test that d=0 yields only the zero flow."""
    flows = list(enumerate_ffvs(fixture_a, paths_a, Demand(d=0, distance_limit=1)))
    assert flows == [FlowVector(flows=(0,) * 9)]

def test_infeasible_system_is_empty(fixture_a, paths_a):
    """Test that d above V(M) produces no solutions."""
    assert list(enumerate_ffvs(fixture_a, paths_a, Demand(d=8))) == []

def test_every_solution_satisfies_the_system(fixture_a, paths_a):
    """Test direct substitution of every emitted FFV for several lambdas."""
    for limit in (INFINITY, 5, 4):
        demand = Demand(d=5, distance_limit=limit)
        for flow in enumerate_ffvs(fixture_a, paths_a, demand):
            assert satisfies_system(flow, fixture_a, paths_a, demand)
            assert transmission_distance(flow, paths_a) <= limit

def test_solution_ssv_bounds(fixture_b, paths_b):
    """Test X <= M and V(X) >= d for every solution of Fixture B."""
    demand = Demand(d=4)
    for flow in enumerate_ffvs(fixture_b, paths_b, demand):
        ssv = ffv_to_ssv(flow, paths_b)
        assert fixture_b.max_state().dominates(ssv)
        assert max_flow(fixture_b, ssv) >= 4

def test_satisfies_system_rejections(fixture_a, paths_a):
    """Test the individual constraint violations."""
    demand = Demand(d=6, distance_limit=6)
    assert satisfies_system((2, 2, 0, 1, 0, 0, 1, 0, 0), fixture_a, paths_a, demand)
    # flow on P_8 whose length exceeds lambda
    assert not satisfies_system((2, 2, 0, 0, 0, 0, 1, 1, 0), fixture_a, paths_a, demand)
    # wrong total
    assert not satisfies_system((2, 2, 0, 1, 0, 0, 0, 0, 0), fixture_a, paths_a, demand)
    # a4 carries P_4 and P_6, budget 1
    assert not satisfies_system((2, 2, 0, 1, 0, 1, 0, 0, 0), fixture_a, paths_a, demand)
    # wrong dimension
    assert not satisfies_system((6,), fixture_a, paths_a, demand)

def test_capacities_override(fixture_a, paths_a):
    """Test enumeration under a state X instead of M."""
    demand = Demand(d=6, distance_limit=6)
    state = fixture_a.state((3, 2, 1, 1, 2, 1, 3, 1))
    flows = [f.flows for f in enumerate_ffvs(fixture_a, paths_a, demand, capacities=state)]
    assert flows == [(2, 2, 0, 1, 0, 0, 1, 0, 0)]
    assert list(enumerate_ffvs(fixture_a, paths_a, demand, capacities=state.minus_unit(0))) == []

def test_first_only_matches_full_enumeration(fixture_b, paths_b):
    """Test that early exit returns a solution exactly when one exists."""
    for d in range(0, 13):
        demand = Demand(d=d, distance_limit=4)
        full = list(enumerate_ffvs(fixture_b, paths_b, demand))
        first = list(enumerate_ffvs(fixture_b, paths_b, demand, first_only=True))
        assert len(first) == min(1, len(full))
        if full:
            assert first[0] == full[0]

@pytest.mark.parametrize("workers", [2, 4])
def test_parallel_enumeration_is_identical(fixture_a, fixture_b, paths_a, paths_b, workers):
    """Test that partitioned enumeration keeps the sequential output and order."""
    for network, paths, demand in (
        (fixture_a, paths_a, Demand(d=6, distance_limit=6)),
        (fixture_b, paths_b, Demand(d=4)),
        (fixture_b, paths_b, Demand(d=7, distance_limit=4)),
    ):
        sequential = list(enumerate_ffvs(network, paths, demand))
        parallel = list(enumerate_ffvs(network, paths, demand, workers=workers))
        assert parallel == sequential

def test_solver_bounds(paths_a):
    """Test upper bounds and forced zeros of the d=6, lambda=6 system."""
    bounds = SolverBounds.build(paths_a, Demand(d=6, distance_limit=6), (3, 2, 2, 1, 2, 1, 3, 2))
    assert bounds.forced_zero == (7, 8)
    assert bounds.upper == (2, 2, 2, 1, 1, 1, 1, 0, 0)
    assert bounds.first_free == 0
