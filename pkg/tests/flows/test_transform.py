# tests/flows/test_transform.py
import pytest

from mfnreliability.core.exceptions import UndefinedDistanceError
from mfnreliability.flows.solver import FlowVector
from mfnreliability.flows.transform import ffv_to_ssv, transmission_distance

@pytest.mark.parametrize("flow, expected", [
    ((2, 2, 0, 1, 0, 0, 1, 0, 0), (3, 2, 1, 1, 2, 1, 3, 1)),
    ((2, 2, 2, 0, 0, 0, 0, 0, 0), (2, 2, 2, 0, 2, 0, 2, 2)),
    ((0,) * 9, (0,) * 8),
])
def test_ffv_to_ssv_fixture_a(paths_a, flow, expected):
    """Test x_i as the sum of the flows of the paths through a_i."""
    assert ffv_to_ssv(FlowVector(flows=flow), paths_a).entries == expected

def test_ffv_to_ssv_dimension(paths_a):
    """Test that a flow of the wrong size is rejected."""
    with pytest.raises(ValueError):
        ffv_to_ssv((1, 2), paths_a)

def test_transmission_distance_fixture_b(paths_b):
    """Test the longest positive-flow path on Fixture B."""
    assert transmission_distance((0, 0, 0, 0, 4), paths_b) == 3
    assert transmission_distance((4, 0, 0, 0, 0), paths_b) == 6
    assert transmission_distance((1, 0, 2, 0, 1), paths_b) == 6

def test_transmission_distance_fixture_a(paths_a):
    """Test max LP_j over P_1, P_2, P_4 and P_7."""
    assert transmission_distance(FlowVector(flows=(2, 2, 0, 1, 0, 0, 1, 0, 0)), paths_a) == 5

def test_transmission_distance_zero_flow(paths_b):
    """Test that the zero flow has no transmission distance."""
    with pytest.raises(UndefinedDistanceError):
        transmission_distance((0, 0, 0, 0, 0), paths_b)
