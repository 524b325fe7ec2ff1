# tests/search/test_dlmp.py
import pytest

from mfnreliability.flows.solver import FlowVector
from mfnreliability.flows.transform import ffv_to_ssv
from mfnreliability.graph.paths import enumerate_mps
from mfnreliability.models.network import Arc, Network
from mfnreliability.models.state import INFINITY, Demand, StateVector
from mfnreliability.search.dlmp import (
    CandidateRecord,
    classical_dmps,
    cycle_check,
    find_dlmps,
    is_antichain,
    verify_real_dlmp,
)

FIXTURE_A_DLMPS = {
    (3, 2, 1, 1, 2, 1, 3, 1),
    (2, 2, 2, 1, 1, 1, 3, 2),
    (2, 2, 2, 0, 2, 1, 3, 1),
    (3, 1, 2, 1, 2, 1, 2, 2),
    (2, 2, 2, 0, 2, 0, 2, 2),
    (3, 2, 1, 1, 2, 0, 2, 2),
}

# --- Helper Fixtures ---
@pytest.fixture
def crossing_network():
    """
    Two routes 1-2-3-4 and 1-3-2-4 that cross on the antiparallel pair a2/a3.
    Cancelling the crossing leaves 1-2-4, which is longer than both routes.
    """
    def arc(i, tail, head, length):
        return Arc(id=f"a{i}", tail=tail, head=head, max_capacity=1, length=length)
    return Network(
        node_count=4,
        arcs=(arc(1, 1, 2, 3), arc(2, 2, 3, 1), arc(3, 3, 2, 1),
              arc(4, 3, 4, 1), arc(5, 1, 3, 1), arc(6, 2, 4, 3)),
        source=1,
        sink=4,
    )
# --------------------------------------------------------------------------------

def test_fixture_a_dlmps(fixture_a):
    """Test that d=6, lambda=6 on Fixture A gives the six reference vectors."""
    result = find_dlmps(fixture_a, Demand(d=6, distance_limit=6))
    assert set(result.as_tuples()) == FIXTURE_A_DLMPS
    assert result.sigma == 6
    assert result.duplicate_count == 0
    assert result.candidate_count == 6
    assert result.rejected_cyclic == 0
    assert result.recovered_cyclic == 0
    assert result.relevant == (1, 2, 3, 4, 5, 6, 7)
    assert result.irrelevant == (8, 9)

def test_output_is_sorted_and_minimal(fixture_a):
    """Test canonical order, no duplicates and pairwise incomparability."""
    result = find_dlmps(fixture_a, Demand(d=6, distance_limit=6))
    tuples = result.as_tuples()
    assert tuples == sorted(tuples)
    assert len(set(tuples)) == len(tuples)
    assert is_antichain(list(result.dlmps))

def test_fixture_a_dlmps_are_real(fixture_a):
    """Test the max-flow definition on every accepted vector."""
    result = find_dlmps(fixture_a, Demand(d=6, distance_limit=6))
    for ssv in result.dlmps:
        assert verify_real_dlmp(fixture_a, ssv, 6)

def test_lambda_below_every_path(fixture_a):
    """Test that lambda=1 leaves no relevant path and no result."""
    result = find_dlmps(fixture_a, Demand(d=6, distance_limit=1))
    assert result.dlmps == ()
    assert result.sigma == 0
    assert result.relevant == ()

def test_zero_demand(fixture_b):
    """Test that d=0 yields exactly the zero vector."""
    result = find_dlmps(fixture_b, Demand(d=0, distance_limit=2))
    assert result.as_tuples() == [(0,) * 6]

def test_infinite_lambda_matches_classical(fixture_a, fixture_b):
    """Test that lambda=inf reproduces the classical d-MP pipeline."""
    for network, d in ((fixture_a, 6), (fixture_a, 3), (fixture_b, 4)):
        constrained = find_dlmps(network, Demand(d=d, distance_limit=INFINITY))
        classical = classical_dmps(network, d)
        assert constrained.as_tuples() == classical.as_tuples()
        assert constrained.recovered_cyclic == 0

def test_fixture_b_dlmps_are_real(fixture_b):
    """Test that every d-MP of Fixture B satisfies V(X)=d and V(X-e_i)<d."""
    result = classical_dmps(fixture_b, 4)
    assert result.sigma == 61
    assert result.sigma == result.duplicate_count + result.rejected_cyclic + len(result.dlmps)
    for ssv in result.dlmps:
        assert verify_real_dlmp(fixture_b, ssv, 4)

def test_parallel_search_is_identical(fixture_b):
    """Test that the worker count does not change the result."""
    demand = Demand(d=5, distance_limit=4)
    assert find_dlmps(fixture_b, demand, workers=1).as_tuples() == \
        find_dlmps(fixture_b, demand, workers=3).as_tuples()

def test_cycle_check_accepts_simple_path(fixture_a, paths_a):
    """Test that a single positive path is acyclic."""
    flow = FlowVector(flows=(0, 0, 0, 0, 0, 0, 0, 1, 0))
    candidate = CandidateRecord(ssv=ffv_to_ssv(flow, paths_a))
    assert cycle_check(fixture_a, paths_a, candidate, flow)

def test_cycle_check_rejects_crossing_routes(crossing_network):
    """Test that routes using a2 and a3 in opposite directions form a 2-cycle."""
    paths = enumerate_mps(crossing_network)
    assert [path.nodes for path in paths.paths] == [(1, 2, 3, 4), (1, 2, 4), (1, 3, 2, 4), (1, 3, 4)]
    flow = FlowVector(flows=(1, 0, 1, 0))
    candidate = CandidateRecord(ssv=ffv_to_ssv(flow, paths))
    assert candidate.ssv.entries == (1, 1, 1, 1, 1, 1)
    assert not cycle_check(crossing_network, paths, candidate, flow)

def test_cyclic_candidate_recovered_under_distance_limit(crossing_network):
    """Test that a cyclic-only vector minimal within lambda is kept by the exact re-check."""
    demand = Demand(d=2, distance_limit=5)
    result = find_dlmps(crossing_network, demand, recheck_cyclic=True)
    assert result.as_tuples() == [(1, 1, 1, 1, 1, 1)]
    assert result.candidate_count == 1
    assert result.rejected_cyclic == 1
    assert result.recovered_cyclic == 1
    assert [x.entries for x in result.recovered] == [(1, 1, 1, 1, 1, 1)]
    # minimal within lambda, but not a d-MP without the limit
    assert not verify_real_dlmp(crossing_network, result.dlmps[0], 2)

def test_cyclic_candidate_dropped_without_recheck(crossing_network):
    """Test the cycle filter alone rejects the crossing vector."""
    result = find_dlmps(crossing_network, Demand(d=2, distance_limit=5), recheck_cyclic=False)
    assert result.dlmps == ()
    assert result.rejected_cyclic == 1

def test_crossing_network_without_limit(crossing_network):
    """Test that without a limit the uncrossed routes give the only d-MP."""
    result = find_dlmps(crossing_network, Demand(d=2))
    assert result.as_tuples() == [(1, 0, 0, 1, 1, 1)]
    assert result.as_tuples() == classical_dmps(crossing_network, 2).as_tuples()

def test_verify_real_dlmp_examples(fixture_a):
    """Test the max-flow definition on accepted, maximal and zero vectors."""
    assert verify_real_dlmp(fixture_a, StateVector(entries=(3, 2, 1, 1, 2, 1, 3, 1)), 6)
    assert not verify_real_dlmp(fixture_a, fixture_a.max_state(), 6)
    assert verify_real_dlmp(fixture_a, fixture_a.zero_state(), 0)

def test_orphan_arcs_are_logged(caplog):
    """Test that arcs on no minimal path produce a warning and zero entries."""
    network = Network(
        node_count=3,
        arcs=(Arc(id="a1", tail=1, head=3, max_capacity=2, length=1),
              Arc(id="a2", tail=3, head=2, max_capacity=2, length=1)),
        source=1,
        sink=3,
    )
    with caplog.at_level("WARNING"):
        result = find_dlmps(network, Demand(d=2))
    assert result.as_tuples() == [(2, 0)]
    assert "a2" in caplog.text
