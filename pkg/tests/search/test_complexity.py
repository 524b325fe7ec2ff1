# tests/search/test_complexity.py
import pytest

from mfnreliability.search.complexity import (
    SweepPoint,
    check_growth,
    complexity_sweep,
    loglog_slope,
    scale_capacities,
)

def _point(sigma, elapsed_ms):
    return SweepPoint(factor=1, d=1, sigma=sigma, dlmp_count=1, elapsed_ms=elapsed_ms)

def test_scale_capacities(fixture_b_uniform):
    """Test that M is multiplied and pmfs are dropped."""
    scaled = scale_capacities(fixture_b_uniform, 3)
    assert scaled.max_capacity == (12, 9, 12, 15, 9, 12)
    assert scaled.lengths == fixture_b_uniform.lengths
    assert not scaled.has_pmfs()
    with pytest.raises(ValueError):
        scale_capacities(fixture_b_uniform, 0)

def test_loglog_slope_linear():
    """Test the fitted slope of a linear relation."""
    points = [_point(10, 1.0), _point(100, 10.0), _point(1000, 100.0)]
    assert loglog_slope(points) == pytest.approx(1.0)

def test_loglog_slope_needs_two_sigmas():
    """Test that a single distinct sigma cannot be fitted."""
    with pytest.raises(ValueError):
        loglog_slope([_point(10, 1.0), _point(10, 2.0)])

def test_check_growth_warns_on_quadratic(caplog):
    """Test that a slope above the threshold is reported, not raised."""
    points = [_point(10, 1.0), _point(100, 100.0), _point(1000, 10000.0)]
    with caplog.at_level("WARNING"):
        assert check_growth(points) is False
    assert "slope" in caplog.text

def test_complexity_sweep_sigma_grows(fixture_b):
    """Test that scaling capacities increases the number of FFVs."""
    points = complexity_sweep(fixture_b, [1, 2])
    assert [p.factor for p in points] == [1, 2]
    assert points[0].d == 5
    assert points[1].d == 11
    assert points[1].sigma > points[0].sigma
