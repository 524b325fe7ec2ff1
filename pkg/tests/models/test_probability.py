# tests/models/test_probability.py
import pytest

from mfnreliability.core.exceptions import MissingPMFError
from mfnreliability.models.network import Arc
from mfnreliability.models.probability import tail_probability, tail_table, upper_probability

@pytest.fixture
def arc_with_pmf():
    return Arc(id="a1", tail=1, head=2, max_capacity=3, length=1, pmf=(0.1, 0.2, 0.3, 0.4))

def test_tail_probability_values(arc_with_pmf):
    """Test P(capacity >= c) at and beyond the bounds."""
    assert tail_probability(arc_with_pmf, 0) == 1.0
    assert tail_probability(arc_with_pmf, 1) == pytest.approx(0.9)
    assert tail_probability(arc_with_pmf, 2) == pytest.approx(0.7)
    assert tail_probability(arc_with_pmf, 3) == pytest.approx(0.4)
    assert tail_probability(arc_with_pmf, 4) == 0.0

def test_tail_probability_non_increasing(arc_with_pmf):
    """Test that the tail never increases with c."""
    values = [tail_probability(arc_with_pmf, c) for c in range(5)]
    assert all(a >= b for a, b in zip(values, values[1:]))

def test_tail_probability_negative_level(arc_with_pmf):
    """Test that negative capacity levels are rejected."""
    with pytest.raises(ValueError):
        tail_probability(arc_with_pmf, -1)

def test_tail_probability_without_pmf():
    """Test that arcs without a distribution raise MissingPMFError."""
    arc = Arc(id="a7", tail=1, head=2, max_capacity=1, length=1)
    with pytest.raises(MissingPMFError) as excinfo:
        tail_probability(arc, 1)
    assert excinfo.value.arcs == ["a7"]

def test_tail_table_lists_all_missing(fixture_a):
    """Test that tail_table names every arc without pmf."""
    with pytest.raises(MissingPMFError) as excinfo:
        tail_table(fixture_a)
    assert excinfo.value.arcs == ["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"]

def test_upper_probability_product(fixture_a_uniform):
    """Test the product of uniform tails for one floor of Fixture A."""
    tails = tail_table(fixture_a_uniform)
    floor = (3, 2, 1, 1, 2, 1, 3, 1)
    expected = (1 / 4) * (1 / 3) * (2 / 3) * (1 / 2) * (1 / 3) * (1 / 2) * (1 / 4) * (2 / 3)
    assert upper_probability(floor, tails) == pytest.approx(expected)
    assert upper_probability((0,) * 8, tails) == pytest.approx(1.0)
    assert upper_probability((4, 0, 0, 0, 0, 0, 0, 0), tails) == 0.0
