import os
import sys

import pytest
from hypothesis import HealthCheck, settings

ROOT = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, ROOT)

from boolean_network import BooleanNetwork, Digraph  # noqa: E402
import fixing_core  # noqa: E402

SAMPLES = os.path.join(ROOT, "samples")

settings.register_profile(
    "fixword",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("fixword")

# f1 = x1 & x2 & x3, f2 = x1 & !x3, f3 = x2 & !x1
EXAMPLE3_IMAGES = [0b000, 0b000, 0b001, 0b001, 0b010, 0b000, 0b010, 0b100]


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Every test starts with default limits, no cost override and quiet logging."""
    for key in list(os.environ):
        if key.startswith("FIXWORD_"):
            monkeypatch.delenv(key, raising=False)
    cost = fixing_core._cost_accepted.set(False)
    verbose = fixing_core._verbose.set(None)
    yield
    fixing_core._cost_accepted.reset(cost)
    fixing_core._verbose.reset(verbose)


@pytest.fixture
def example3():
    return BooleanNetwork(3, EXAMPLE3_IMAGES)


@pytest.fixture
def negation():
    return BooleanNetwork(1, [1, 0])


@pytest.fixture
def sample_path():
    return lambda name: os.path.join(SAMPLES, name)


@pytest.fixture
def path3():
    return Digraph.from_edges(3, [(1, 2), (2, 3)], loops=[1, 2, 3])


@pytest.fixture
def path4():
    return Digraph.from_edges(4, [(1, 2), (2, 3), (3, 4)], loops=[1, 2, 3, 4])


@pytest.fixture
def star4():
    return Digraph.from_edges(4, [(1, 2), (1, 3), (1, 4)], loops=[1, 2, 3, 4])


@pytest.fixture
def triangle():
    return Digraph.from_edges(3, [(1, 2), (2, 3), (1, 3)], loops=[1, 2, 3])


@pytest.fixture
def looped_cycle3():
    return Digraph(3, frozenset({(1, 2), (2, 3), (3, 1), (1, 1), (2, 2), (3, 3)}))
