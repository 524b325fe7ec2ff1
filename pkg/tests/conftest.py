# tests/conftest.py
import os
import sys

import pytest
from faker import Faker

# Add the src directory to the Python path to allow imports
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
src_path = os.path.join(project_root, 'src')
if src_path not in sys.path:
    sys.path.insert(0, src_path)

from mfnreliability.graph.paths import enumerate_mps
from mfnreliability.schemas.network_file import load_fixture
from mfnreliability.synthetic import random_network

# --- Reference networks ---
# Fixture A: 5 nodes, 8 arcs (a4 and a6 undirected), 9 declared minimal paths.
# Fixture B: 4 nodes, 6 arcs (a4 undirected), 5 declared minimal paths.

@pytest.fixture(scope="session")
def fixture_a():
    return load_fixture("example1")

@pytest.fixture(scope="session")
def fixture_b():
    return load_fixture("fig2")

@pytest.fixture(scope="session")
def fixture_a_uniform(fixture_a):
    """Fixture A with pmf_i[k] = 1/(M_i+1) on every arc."""
    return fixture_a.with_uniform_pmfs()

@pytest.fixture(scope="session")
def fixture_b_uniform(fixture_b):
    return fixture_b.with_uniform_pmfs()

@pytest.fixture(scope="session")
def paths_a(fixture_a):
    return enumerate_mps(fixture_a)

@pytest.fixture(scope="session")
def paths_b(fixture_b):
    return enumerate_mps(fixture_b)

# --- Synthetic networks ---
@pytest.fixture
def network_factory():
    """Returns a function seed -> small random connected network (Faker-seeded)."""
    def make(seed: int, **limits):
        fake = Faker()
        fake.seed_instance(seed)
        return random_network(fake, **limits)
    return make
