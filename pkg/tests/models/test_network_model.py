# tests/models/test_network_model.py
import pytest
from pydantic import ValidationError

from mfnreliability.models.network import Arc, Network
from mfnreliability.models.state import StateVector

def _arc(**overrides):
    values = dict(id="a1", tail=1, head=2, max_capacity=2, length=1)
    values.update(overrides)
    return Arc(**values)

def test_create_arc_defaults():
    """Test that an arc is directed and has no pmf by default."""
    arc = _arc()
    assert arc.undirected is False
    assert arc.pmf is None
    assert arc.endpoints() == (1, 2)

def test_arc_self_loop_rejected():
    """Test that an arc whose endpoints coincide is rejected."""
    with pytest.raises(ValidationError):
        _arc(tail=2, head=2)

def test_arc_length_must_be_positive():
    """Test that zero or negative lengths are rejected."""
    with pytest.raises(ValidationError):
        _arc(length=0)

def test_arc_pmf_length_must_match_capacity():
    """Test that the pmf needs exactly M_i + 1 entries."""
    with pytest.raises(ValidationError):
        _arc(max_capacity=2, pmf=(0.5, 0.5))

def test_arc_pmf_must_sum_to_one():
    """Test that a pmf whose entries do not add up to 1 is rejected."""
    with pytest.raises(ValidationError):
        _arc(max_capacity=1, pmf=(0.5, 0.4))

def test_arc_pmf_entries_in_unit_interval():
    """Test that negative pmf entries are rejected even if the sum is 1."""
    with pytest.raises(ValidationError):
        _arc(max_capacity=1, pmf=(1.5, -0.5))

def test_reverse_endpoints_only_for_undirected():
    """Test that only undirected arcs can be traversed head -> tail."""
    assert _arc(undirected=True).endpoints(reverse=True) == (2, 1)
    with pytest.raises(ValueError):
        _arc().endpoints(reverse=True)

def test_network_duplicate_arc_ids():
    """Test that two arcs with the same id are rejected."""
    with pytest.raises(ValidationError):
        Network(node_count=2, arcs=(_arc(), _arc()), source=1, sink=2)

def test_network_source_equals_sink():
    """Test that source and sink must differ."""
    with pytest.raises(ValidationError):
        Network(node_count=2, arcs=(_arc(),), source=1, sink=1)

def test_network_arc_outside_node_range():
    """Test that arcs must reference nodes in 1..n."""
    with pytest.raises(ValidationError):
        Network(node_count=2, arcs=(_arc(head=3),), source=1, sink=2)

def test_network_declared_path_with_unknown_arc():
    """Test that declared paths may only reference existing arcs."""
    with pytest.raises(ValidationError):
        Network(node_count=2, arcs=(_arc(),), source=1, sink=2, declared_paths=(("a9",),))

def test_fixture_a_vectors(fixture_a):
    """Test M and L of Fixture A follow the arc order of the document."""
    assert fixture_a.m == 8
    assert fixture_a.max_capacity == (3, 2, 2, 1, 2, 1, 3, 2)
    assert fixture_a.lengths == (1, 2, 1, 3, 2, 1, 2, 1)
    assert fixture_a.arc_index("a4") == 3
    with pytest.raises(KeyError):
        fixture_a.arc_index("a42")

def test_state_space_size(fixture_a, fixture_b):
    """Test prod(M_i + 1) for both reference networks."""
    assert fixture_a.state_space_size() == 5184
    assert fixture_b.state_space_size() == 12000

def test_network_state_bounds(fixture_a):
    """Test that Network.state rejects entries above M_i."""
    assert fixture_a.state([0] * 8) == StateVector.zero(8)
    with pytest.raises(ValidationError):
        fixture_a.state([4, 0, 0, 0, 0, 0, 0, 0])
    with pytest.raises(ValidationError):
        fixture_a.state([0] * 7)

def test_with_uniform_pmfs(fixture_a):
    """Test that uniform pmfs are attached to every arc without touching the original."""
    uniform = fixture_a.with_uniform_pmfs()
    assert fixture_a.missing_pmfs() == [a.id for a in fixture_a.arcs]
    assert uniform.has_pmfs()
    assert uniform.arcs[0].pmf == pytest.approx((0.25, 0.25, 0.25, 0.25))

def test_with_uniform_pmfs_missing_only():
    """Test that missing_only keeps the pmfs already present."""
    network = Network(
        node_count=2,
        arcs=(_arc(max_capacity=1, pmf=(0.1, 0.9)), _arc(id="a2", max_capacity=1)),
        source=1,
        sink=2,
    )
    filled = network.with_uniform_pmfs(missing_only=True)
    assert filled.arcs[0].pmf == (0.1, 0.9)
    assert filled.arcs[1].pmf == pytest.approx((0.5, 0.5))

def test_network_repr(fixture_b):
    """Test the __repr__ method of Network."""
    assert repr(fixture_b) == "<Network(n=4, m=6, source=1, sink=4)>"
